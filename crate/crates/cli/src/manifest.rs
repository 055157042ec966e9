//! Stage manifests: every file a stage writes, with content hashes.
//!
//! A stage reads its inputs only through the manifest of the stage before
//! it, and refuses files whose hash no longer matches.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use sha1::Sha1;
use sha2::{Digest, Sha256};

use crate::error::{CliError, Result};

pub const MANIFEST_FILE: &str = "manifest.json";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Artifact {
    /// Relative to the directory holding the manifest.
    pub path: String,
    pub bytes: u64,
    pub sha256: String,
    /// Hash git would give the file as a blob.
    pub git_blob: String,
}

impl Artifact {
    pub fn of(rel: &str, content: &[u8]) -> Self {
        let mut blob = Sha1::new();
        blob.update(format!("blob {}\0", content.len()).as_bytes());
        blob.update(content);
        Self {
            path: rel.to_string(),
            bytes: content.len() as u64,
            sha256: hex::encode(Sha256::digest(content)),
            git_blob: hex::encode(blob.finalize()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StageManifest {
    pub schema_version: u32,
    pub stage: String,
    pub versions: BTreeMap<String, String>,
    pub config_sha256: String,
    pub master_seed: u64,
    /// Manifest of the stage that produced the inputs, if any.
    pub input_manifest: Option<Artifact>,
    pub inputs: Vec<Artifact>,
    pub outputs: Vec<Artifact>,
    pub attributes: BTreeMap<String, String>,
    pub elapsed_ms: u64,
}

pub fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([
        ("gwclass-cli".to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("gwclass-core".to_string(), gwclass_core::VERSION.to_string()),
    ])
}

/// Collects the outputs of one stage directory.
pub struct StageWriter {
    dir: PathBuf,
    manifest: StageManifest,
    started: std::time::Instant,
}

impl StageWriter {
    pub fn create(dir: &Path, stage: &str, config_sha256: &str, master_seed: u64) -> Result<Self> {
        fs::create_dir_all(dir).map_err(CliError::io(dir))?;
        Ok(Self {
            dir: dir.to_path_buf(),
            manifest: StageManifest {
                schema_version: SCHEMA_VERSION,
                stage: stage.to_string(),
                versions: versions(),
                config_sha256: config_sha256.to_string(),
                master_seed,
                input_manifest: None,
                inputs: Vec::new(),
                outputs: Vec::new(),
                attributes: BTreeMap::new(),
                elapsed_ms: 0,
            },
            started: std::time::Instant::now(),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn consumed(&mut self, input: &LoadedStage) {
        self.manifest.input_manifest = Some(input.manifest_artifact.clone());
    }

    pub fn consumed_file(&mut self, a: Artifact) {
        self.manifest.inputs.push(a);
    }

    pub fn attribute(&mut self, key: &str, value: impl ToString) {
        self.manifest.attributes.insert(key.to_string(), value.to_string());
    }

    pub fn write(&mut self, rel: &str, content: &[u8]) -> Result<()> {
        let path = self.dir.join(rel);
        if let Some(parent) = path.parent() {
            fs::create_dir_all(parent).map_err(CliError::io(parent))?;
        }
        fs::write(&path, content).map_err(CliError::io(&path))?;
        self.manifest.outputs.push(Artifact::of(rel, content));
        Ok(())
    }

    pub fn write_json<T: Serialize>(&mut self, rel: &str, value: &T) -> Result<()> {
        let mut s = serde_json::to_string_pretty(value).map_err(gwclass_core::Error::from)?;
        s.push('\n');
        self.write(rel, s.as_bytes())
    }

    pub fn finish(mut self) -> Result<StageManifest> {
        self.manifest.elapsed_ms = self.started.elapsed().as_millis() as u64;
        let mut s = serde_json::to_string_pretty(&self.manifest).map_err(gwclass_core::Error::from)?;
        s.push('\n');
        let path = self.dir.join(MANIFEST_FILE);
        fs::write(&path, s).map_err(CliError::io(&path))?;
        log::info!(
            "{}: {} files in {} ({} ms)",
            self.manifest.stage,
            self.manifest.outputs.len(),
            self.dir.display(),
            self.manifest.elapsed_ms
        );
        Ok(self.manifest)
    }
}

/// A finished stage directory, opened for reading.
#[derive(Debug, Clone)]
pub struct LoadedStage {
    pub dir: PathBuf,
    pub manifest: StageManifest,
    manifest_artifact: Artifact,
}

impl LoadedStage {
    pub fn open(dir: &Path) -> Result<Self> {
        let path = dir.join(MANIFEST_FILE);
        let bytes = fs::read(&path).map_err(CliError::io(&path))?;
        let manifest: StageManifest = serde_json::from_slice(&bytes)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
        if manifest.schema_version != SCHEMA_VERSION {
            return Err(CliError::Data(format!(
                "{}: schema_version {} (expected {SCHEMA_VERSION})",
                path.display(),
                manifest.schema_version
            )));
        }
        Ok(Self {
            dir: dir.to_path_buf(),
            manifest,
            manifest_artifact: Artifact::of(MANIFEST_FILE, &bytes),
        })
    }

    /// Fails unless the manifest came from one of `stages`.
    pub fn expect_stage(self, stages: &[&str]) -> Result<Self> {
        if stages.contains(&self.manifest.stage.as_str()) {
            Ok(self)
        } else {
            Err(CliError::Data(format!(
                "{} holds `{}` output; expected one of: {}",
                self.dir.display(),
                self.manifest.stage,
                stages.join(", ")
            )))
        }
    }

    pub fn attribute(&self, key: &str) -> Result<&str> {
        self.manifest
            .attributes
            .get(key)
            .map(String::as_str)
            .ok_or_else(|| CliError::Data(format!("{}: manifest has no `{key}` attribute", self.dir.display())))
    }

    /// Listed outputs whose path starts with `prefix`, in manifest order.
    pub fn outputs_under(&self, prefix: &str) -> Vec<&Artifact> {
        self.manifest.outputs.iter().filter(|a| a.path.starts_with(prefix)).collect()
    }

    pub fn output(&self, rel: &str) -> Result<&Artifact> {
        self.manifest
            .outputs
            .iter()
            .find(|a| a.path == rel)
            .ok_or_else(|| CliError::Data(format!("{}: `{rel}` is not listed in the manifest", self.dir.display())))
    }

    /// Reads a listed file and checks its hash.
    pub fn read(&self, a: &Artifact) -> Result<Vec<u8>> {
        let path = self.dir.join(&a.path);
        let bytes = fs::read(&path).map_err(CliError::io(&path))?;
        if hex::encode(Sha256::digest(&bytes)) != a.sha256 {
            return Err(CliError::Data(format!("{}: content does not match its manifest hash", path.display())));
        }
        Ok(bytes)
    }

    pub fn read_string(&self, a: &Artifact) -> Result<String> {
        String::from_utf8(self.read(a)?)
            .map_err(|_| CliError::Data(format!("{}: not UTF-8", self.dir.join(&a.path).display())))
    }

    pub fn read_json<T: serde::de::DeserializeOwned>(&self, rel: &str) -> Result<T> {
        let a = self.output(rel)?;
        serde_json::from_slice(&self.read(a)?)
            .map_err(|e| CliError::Data(format!("{}: {e}", self.dir.join(rel).display())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn git_blob_hash_matches_git() {
        // `printf 'hello\n' | git hash-object --stdin`
        assert_eq!(Artifact::of("x", b"hello\n").git_blob, "ce013625030ba8dba906f756967f9e9ca394464a");
        assert_eq!(Artifact::of("x", b"").git_blob, "e69de29bb2d1d6434b8b29ae775ad8c2e48c5391");
    }
}

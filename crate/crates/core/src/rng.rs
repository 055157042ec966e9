//! Seed derivation for independent, order-free random streams.
//!
//! Every stream is a ChaCha8 generator seeded from a hash of the master seed
//! and a list of integer coordinates, so results never depend on iteration
//! order or thread count.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream tags keep derived seeds for different purposes disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u64)]
pub enum Stream {
    Trial = 1,
    Noise = 2,
    Split = 3,
    Model = 4,
    Permutation = 5,
    Repeat = 6,
    Probe = 7,
}

fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derives a child seed from `master`, a stream tag and coordinates.
pub fn derive(master: u64, stream: Stream, coords: &[u64]) -> u64 {
    let mut h = mix(master ^ mix(stream as u64));
    for &c in coords {
        h = mix(h ^ mix(c));
    }
    h
}

pub fn rng_from(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn child_rng(master: u64, stream: Stream, coords: &[u64]) -> ChaCha8Rng {
    rng_from(derive(master, stream, coords))
}

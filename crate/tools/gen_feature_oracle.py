"""Reference feature values for the jitter-free CC, TRF and baseline
surrogates, evaluated directly with numpy.

Writes crates/core/tests/data/surrogate_features.txt as `name value` lines.
"""
import numpy as np

F, NC, A, FS, REC = 1e5, 5, 10.0, 1e7, 2e-4
N = int(round(REC * FS))
t = np.arange(N) / FS


def burst(tt):
    inside = (tt >= 0) & (tt < NC / F)
    v = 0.5 * A * (1 - np.cos(2 * np.pi * F * tt / NC)) * np.sin(2 * np.pi * F * tt)
    return np.where(inside, v, 0.0)


def surrogate(gain, sign, b, echo_gain, echo_delay, delay=70e-6):
    direct = burst((t - delay) / b)
    echo = echo_gain * burst(t - delay - echo_delay) if echo_gain > 0 else 0.0
    return sign * gain * (direct + echo)


base = surrogate(1.0, 1.0, 1.0, 0.0, 0.0)
cc = surrogate(1.30, 1.0, 1.05, 0.1, 20e-6)
trf = surrogate(0.70, 1.0, 1.05, 0.1, 20e-6)


def time_features(m, b):
    fm, fb = np.abs(np.fft.rfft(m)), np.abs(np.fft.rfft(b))
    em, eb = np.sum(m * m), np.sum(b * b)
    out = {
        "CCD": 1 - np.sqrt(np.sum(m * b) ** 2 / (eb * em)),
        "MAD": np.mean(np.abs(m - m.mean())),
        "NSED": (em - eb) / eb,
        "PPAD": np.ptp(m) - np.ptp(b),
        "RMS": np.sqrt(np.mean(m * m)),
        "RMSD": np.sqrt(np.sum((m - b) ** 2) / eb),
        "SDD": np.sum(np.abs(fb - fm)) / np.sqrt(np.sum(fb * fb) * np.sum(fm * fm)),
        "SER": em / eb,
        "SIGMA": np.std(m),
        "VAR": np.var(m),
    }
    return out


def free_features(x):
    f = np.abs(np.fft.rfft(x))
    rms = np.sqrt(np.mean(x * x))
    root = np.mean(np.sqrt(np.abs(x)))
    peak = np.max(np.abs(x))
    return {
        "SF1": np.mean(x ** 3),
        "SF2": np.mean(x ** 4),
        "SF3": np.ptp(x),
        "SF4": np.mean(x ** 4) / np.mean(x ** 2) ** 2,
        "SF5": rms,
        "SF6": np.std(x),
        "SF7": peak / rms,
        "SF8": rms / root,
        "SF9": peak / root,
        "SF10": peak / root ** 2,
        "SF11": np.mean(f * f),
        "SF12": np.var(f),
        "SF13": np.mean(f),
    }


lines = ["# jitter-free surrogates at fs=10 MHz, 2000 samples; numpy reference"]
for k, v in time_features(cc, base).items():
    lines.append(f"CC.{k} {v:.17e}")
for k, v in free_features(trf).items():
    lines.append(f"TRF.{k} {v:.17e}")
open("crates/core/tests/data/surrogate_features.txt", "w").write("\n".join(lines) + "\n")

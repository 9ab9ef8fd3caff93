//! Shared fixtures for the criterion benches.

use glmix::reps::{build_gl_np1, GeneratorSet, RepSpec};
use glmix::scalar::rat;
use glmix::{Bindings, Param};

pub fn gl3_generators(d: usize) -> GeneratorSet {
    build_gl_np1(&RepSpec::gl3(d).expect("block size"))
}

pub fn unit_bindings() -> Bindings {
    [Param::Omega, Param::Nu, Param::Alpha].into_iter().map(|p| (p, rat(1))).collect()
}

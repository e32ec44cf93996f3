#![allow(dead_code)]

use proptest::test_runner::{Config, RngSeed};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed for every randomized test, taken from `PARALLO_SEED` when set.
pub fn seed() -> u64 {
    std::env::var("PARALLO_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed)
}

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed())
}

pub fn proptest_config(cases: u32) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed()),
        failure_persistence: None,
        ..Config::default()
    }
}

use parallo::{RatMatrix, RatPolytope, RatVector, Rational};
use rand::Rng;

/// Random integer matrix of determinant ±1: a product of elementary moves.
pub fn unimodular(rng: &mut impl Rng, d: usize) -> RatMatrix {
    let mut m = vec![vec![0i64; d]; d];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    for _ in 0..3 * d {
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        let k = if rng.gen_bool(0.5) { 1 } else { -1 };
        for c in 0..d {
            m[i][c] += k * m[j][c];
        }
        if rng.gen_bool(0.2) {
            m.swap(i, j);
        }
    }
    let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
    RatMatrix::from_i64(&rows).unwrap()
}

pub fn random_shift(rng: &mut impl Rng, d: usize) -> RatVector {
    RatVector::new(
        (0..d)
            .map(|_| Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=5).into()))
            .collect(),
    )
}

/// Vertex correspondence `p → q` under `x ↦ A x + shift`, checked to carry
/// every face of `p` onto a face of `q` of the same dimension and to be a
/// bijection on faces.
pub fn affine_vertex_map(p: &RatPolytope, q: &RatPolytope, a: &RatMatrix, shift: &RatVector) -> Option<Vec<usize>> {
    let map: Vec<usize> = p
        .vertices()
        .iter()
        .map(|v| q.vertex_index(&(&a.mul_vec(v).unwrap() + shift)))
        .collect::<Option<_>>()?;
    let (lp, lq) = (p.face_lattice(), q.face_lattice());
    if lp.len() != lq.len() {
        return None;
    }
    for f in lp.faces() {
        let mut image: Vec<usize> = f.vertices.iter().map(|&v| map[v]).collect();
        image.sort_unstable();
        let g = lq.find(&image)?;
        if lq.face(g).dim != f.dim {
            return None;
        }
    }
    Some(map)
}

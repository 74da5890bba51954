//! Seeded pseudo-random inputs. Everything random in the suites goes
//! through here so that a seed fully determines a report.

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg32;

use crate::linalg::{rat, Matrix, Rational};

pub struct Sampler {
    rng: Pcg32,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: Pcg32::seed_from_u64(seed),
        }
    }

    /// Uniform integer in `-3..=3`.
    pub fn small(&mut self) -> Rational {
        rat(self.rng.gen_range(-3..=3))
    }

    /// Uniform integer in `-3..=3` without zero.
    pub fn small_nonzero(&mut self) -> Rational {
        let v = self.rng.gen_range(1..=3);
        rat(if self.rng.gen_bool(0.5) { v } else { -v })
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Rational> {
        (0..n).map(|_| self.small_nonzero()).collect()
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_rows_with_cols((0..rows).map(|_| self.vector(cols)).collect(), cols)
    }

    /// A matrix of full row rank.
    pub fn full_rank_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        assert!(rows <= cols);
        loop {
            let m = self.matrix(rows, cols);
            if m.rank() == rows {
                return m;
            }
        }
    }
}

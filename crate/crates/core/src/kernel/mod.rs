//! Exact arithmetic shared by every other module: rationals, the coefficient
//! ring abstraction, dense rational matrices with an exact kernel, and a small
//! sparse multivariate polynomial ring used as a symbolic coefficient domain.

mod matrix;
pub(crate) mod mpoly;
mod rational;

use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg};

use num_traits::{One, Zero};

pub use matrix::{kernel_basis, rank, RatMatrix};
pub use mpoly::MPoly;
pub use rational::{binomial, factorial, factorial_int, Rational};

/// Commutative ring with exact arithmetic, used as the coefficient domain of
/// every graded element.
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn from_rational(r: &Rational) -> Self;

    fn scaled(&self, r: &Rational) -> Self {
        self.clone() * &Self::from_rational(r)
    }
}

/// Finite-dimensional vector over the rationals: the value type of polynomial
/// maps fed to the complete polarization.
pub trait Vector: Clone + Send + Sync {
    /// `self += c * x`
    fn axpy(&mut self, c: &Rational, x: &Self);

    fn scale(&mut self, c: &Rational);

    fn is_zero_vector(&self) -> bool;
}

impl Vector for Rational {
    fn axpy(&mut self, c: &Rational, x: &Self) {
        *self += &(c * x);
    }

    fn scale(&mut self, c: &Rational) {
        *self *= c;
    }

    fn is_zero_vector(&self) -> bool {
        self.is_zero()
    }
}

impl Vector for Vec<Rational> {
    fn axpy(&mut self, c: &Rational, x: &Self) {
        assert_eq!(self.len(), x.len(), "vector length mismatch");
        for (a, b) in self.iter_mut().zip(x) {
            *a += &(c * b);
        }
    }

    fn scale(&mut self, c: &Rational) {
        for a in self.iter_mut() {
            *a *= c;
        }
    }

    fn is_zero_vector(&self) -> bool {
        self.iter().all(Zero::is_zero)
    }
}

impl Coeff for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    fn scaled(&self, r: &Rational) -> Self {
        self * r
    }
}

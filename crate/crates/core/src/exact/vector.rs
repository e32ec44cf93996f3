use std::fmt;
use std::ops::{Add, Deref, Index, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::Scalar;

/// A dense vector of exact scalars.
///
/// Ordering is lexicographic, which the rest of the crate relies on for
/// deterministic output.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Vector<T>(pub Vec<T>);

impl<T: Scalar> Vector<T> {
    pub fn new(entries: Vec<T>) -> Self {
        Vector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        Vector(vec![T::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = T::one();
        v
    }

    pub fn from_i64(entries: &[i64]) -> Self {
        Vector(entries.iter().map(|&x| T::from_i64(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn into_inner(self) -> Vec<T> {
        self.0
    }

    pub fn dot(&self, other: &Self) -> T {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
    }

    pub fn norm_squared(&self) -> T {
        self.dot(self)
    }

    pub fn scale(&self, k: &T) -> Self {
        Vector(self.0.iter().map(|x| x.clone() * k.clone()).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Positive multiple with coprime integer entries. The zero vector maps to itself.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = self
            .0
            .iter()
            .fold(T::Int::one(), |acc, x| acc.lcm(&x.denom_int()));
        let ints: Vec<T::Int> = self
            .0
            .iter()
            .map(|x| x.numer_int() * (lcm.clone() / x.denom_int()))
            .collect();
        let gcd = ints
            .iter()
            .fold(T::Int::zero(), |acc, x| acc.gcd(x));
        Vector(ints.into_iter().map(|x| T::from_int(x / gcd.clone())).collect())
    }

    /// Primitive integer representative of the line through `self`, with its
    /// first nonzero entry positive.
    pub fn canonical_direction(&self) -> Self {
        let p = self.primitive();
        match p.0.iter().find(|x| !x.is_zero()) {
            Some(lead) if lead.is_negative() => -p,
            _ => p,
        }
    }

    /// True when `other` is a nonzero multiple of `self`.
    pub fn is_parallel(&self, other: &Self) -> bool {
        !self.is_zero()
            && !other.is_zero()
            && self.canonical_direction() == other.canonical_direction()
    }

    /// `Some(k)` with `other = k * self`, if such a `k` exists.
    pub fn ratio_to(&self, other: &Self) -> Option<T> {
        let pivot = self.0.iter().position(|x| !x.is_zero())?;
        let k = other.0[pivot].clone() / self.0[pivot].clone();
        (self.scale(&k) == *other).then_some(k)
    }
}

impl<T> Deref for Vector<T> {
    type Target = [T];
    fn deref(&self) -> &[T] {
        &self.0
    }
}

impl<T> Index<usize> for Vector<T> {
    type Output = T;
    fn index(&self, i: usize) -> &T {
        &self.0[i]
    }
}

impl<T> From<Vec<T>> for Vector<T> {
    fn from(v: Vec<T>) -> Self {
        Vector(v)
    }
}

impl<T: Scalar> Add for &Vector<T> {
    type Output = Vector<T>;
    fn add(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Sub for &Vector<T> {
    type Output = Vector<T>;
    fn sub(self, rhs: &Vector<T>) -> Vector<T> {
        debug_assert_eq!(self.dim(), rhs.dim());
        Vector(
            self.0
                .iter()
                .zip(&rhs.0)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        )
    }
}

impl<T: Scalar> Neg for &Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        Vector(self.0.iter().map(|a| -a.clone()).collect())
    }
}

impl<T: Scalar> Neg for Vector<T> {
    type Output = Vector<T>;
    fn neg(self) -> Vector<T> {
        -&self
    }
}

impl<T: fmt::Display> fmt::Display for Vector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Centroid of a nonempty list of points.
pub fn centroid<'a, T: Scalar, I>(points: I) -> Vector<T>
where
    I: IntoIterator<Item = &'a Vector<T>>,
{
    let mut iter = points.into_iter();
    let first = iter.next().expect("centroid of an empty point set").clone();
    let (sum, count) = iter.fold((first, 1i64), |(acc, n), p| (&acc + p, n + 1));
    sum.scale(&(T::one() / T::from_i64(count)))
}

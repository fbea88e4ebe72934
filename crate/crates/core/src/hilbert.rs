//! Hilbert series of `S/I(G)` from the f-vector of the independence complex,
//! and the integer polynomial arithmetic used to compare rational series exactly.

use serde::Serialize;

use crate::complex::f_vector_of_faces;
use crate::graph::{self, Graph};

/// Dense integer polynomial, coefficient of `t^k` at index `k`, trailing zeros trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Poly(Vec<i64>);

impl Poly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        Poly::new(vec![c])
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Self {
        let mut c = vec![0i64; k + 1];
        let mut binom: i64 = 1;
        for (i, slot) in c.iter_mut().enumerate() {
            *slot = if i % 2 == 0 { binom } else { -binom };
            binom = binom * (k - i) as i64 / (i as i64 + 1);
        }
        Poly::new(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly::new(
            (0..len)
                .map(|k| self.0.get(k).copied().unwrap_or(0) + other.0.get(k).copied().unwrap_or(0))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> Poly {
        Poly::new(self.0.iter().map(|&x| x * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly::default();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

/// `h(t) / (1 - t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    pub h: Poly,
    pub d: usize,
}

impl HilbertSeries {
    pub fn new(h: Poly, d: usize) -> Self {
        HilbertSeries { h, d }
    }

    /// `e = h(1)`.
    pub fn multiplicity(&self) -> i64 {
        self.h.eval_at_one()
    }

    pub fn degree(&self) -> usize {
        self.h.degree().unwrap_or(0)
    }

    /// Coefficient `h_k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> i64 {
        self.h.coeffs().get(k).copied().unwrap_or(0)
    }

    /// Numerator after rewriting over `(1 - t)^{total}` with `total >= d`.
    pub fn numerator_over(&self, total: usize) -> Poly {
        assert!(total >= self.d, "denominator exponent too small");
        self.h.mul(&Poly::one_minus_t_pow(total - self.d))
    }

    /// Cross-multiplied numerators `(self.h (1-t)^{other.d}, other.h (1-t)^{self.d})`;
    /// the two series are equal exactly when these coincide.
    pub fn cross_multiplied(&self, other: &HilbertSeries) -> (Poly, Poly) {
        let top = self.d.max(other.d);
        (self.numerator_over(top), other.numerator_over(top))
    }

    pub fn same_series(&self, other: &HilbertSeries) -> bool {
        let (a, b) = self.cross_multiplied(other);
        a == b
    }

    /// `c * self + k`, as a series over the same denominator.
    pub fn scale_shift(&self, c: i64, k: i64) -> HilbertSeries {
        HilbertSeries::new(
            self.h.scale(c).add(&Poly::one_minus_t_pow(self.d).scale(k)),
            self.d,
        )
    }
}

/// Hilbert series of a Stanley–Reisner ring from its f-vector `(f_{-1}, f_0, ...)`:
/// numerator `sum_i f_{i-1} t^i (1-t)^{d-i}` with `d = dim + 1`.
pub fn hilbert_from_f_vector(f: &[u64]) -> HilbertSeries {
    let d = f.len().saturating_sub(1);
    let mut h = Poly::default();
    for (i, &fi) in f.iter().enumerate() {
        let mut term = vec![0i64; i + 1];
        term[i] = fi as i64;
        h = h.add(&Poly::new(term).mul(&Poly::one_minus_t_pow(d - i)));
    }
    HilbertSeries::new(h, d)
}

/// Hilbert series of `S/I(G)`.
pub fn hilbert(g: &Graph) -> HilbertSeries {
    hilbert_from_f_vector(&f_vector_of_faces(&graph::independent_sets(g)))
}

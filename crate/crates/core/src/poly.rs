//! Exact integer polynomials.
//!
//! Two small fit-for-purpose types: dense univariate polynomials over the
//! integers (f/h/r-vector identities) and sparse multivariate polynomials
//! (multigraded Hilbert series numerators). Coefficients are `i64`; every
//! use in this crate keeps them tiny, but arithmetic is checked so an
//! overflow would panic rather than wrap.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

/// Dense univariate polynomial; `coeffs[i]` is the coefficient of `t^i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly1(pub Vec<i64>);

impl Poly1 {
    pub fn zero() -> Poly1 {
        Poly1(Vec::new())
    }

    pub fn one() -> Poly1 {
        Poly1(vec![1])
    }

    /// The monomial `c * t^k`.
    pub fn term(c: i64, k: usize) -> Poly1 {
        let mut v = vec![0; k + 1];
        v[k] = c;
        Poly1(v).normalized()
    }

    fn normalized(mut self) -> Poly1 {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &Poly1) -> Poly1 {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![0i64; n];
        for (i, c) in v.iter_mut().enumerate() {
            *c = self.coeff(i).checked_add(other.coeff(i)).expect("poly overflow");
        }
        Poly1(v).normalized()
    }

    pub fn mul(&self, other: &Poly1) -> Poly1 {
        if self.0.is_empty() || other.0.is_empty() {
            return Poly1::zero();
        }
        let mut v = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, &a) in self.0.iter().enumerate() {
            for (j, &b) in other.0.iter().enumerate() {
                v[i + j] = v[i + j]
                    .checked_add(a.checked_mul(b).expect("poly overflow"))
                    .expect("poly overflow");
            }
        }
        Poly1(v).normalized()
    }

    /// `(1 + t)^k`.
    pub fn one_plus_t_pow(k: usize) -> Poly1 {
        let mut p = Poly1::one();
        let base = Poly1(vec![1, 1]);
        for _ in 0..k {
            p = p.mul(&base);
        }
        p
    }

    /// `(1 - t)^k`.
    pub fn one_minus_t_pow(k: usize) -> Poly1 {
        let mut p = Poly1::one();
        let base = Poly1(vec![1, -1]);
        for _ in 0..k {
            p = p.mul(&base);
        }
        p
    }

    pub fn eval(&self, t: i64) -> i64 {
        let mut acc = 0i64;
        for &c in self.0.iter().rev() {
            acc = acc.checked_mul(t).and_then(|x| x.checked_add(c)).expect("poly overflow");
        }
        acc
    }
}

/// Sparse multivariate polynomial in `n` variables with integer
/// coefficients; terms keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MPoly {
    pub n: usize,
    terms: BTreeMap<Vec<u16>, i64>,
}

impl MPoly {
    pub fn zero(n: usize) -> MPoly {
        MPoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: i64) -> MPoly {
        let mut p = MPoly::zero(n);
        p.add_term(&vec![0u16; n], c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exps: &[u16], c: i64) {
        debug_assert_eq!(exps.len(), self.n);
        if c == 0 {
            return;
        }
        let e = self.terms.entry(exps.to_vec()).or_insert(0);
        *e = e.checked_add(c).expect("poly overflow");
        if *e == 0 {
            self.terms.remove(exps);
        }
    }

    pub fn add_assign(&mut self, other: &MPoly) {
        for (e, &c) in &other.terms {
            self.add_term(e, c);
        }
    }

    pub fn sub(&self, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e, -c);
        }
        out
    }

    /// Multiply in place by the binomial `1 - x_j`.
    pub fn mul_one_minus_var(&mut self, j: usize) {
        let old: Vec<(Vec<u16>, i64)> = self.terms.iter().map(|(e, &c)| (e.clone(), c)).collect();
        for (mut e, c) in old {
            e[j] += 1;
            self.add_term(&e, -c);
        }
    }

    /// The minimal term in (total degree, lex) order, if nonzero.
    pub fn min_term(&self) -> Option<(&Vec<u16>, i64)> {
        self.terms
            .iter()
            .min_by(|(e1, _), (e2, _)| {
                let d1: u32 = e1.iter().map(|&x| x as u32).sum();
                let d2: u32 = e2.iter().map(|&x| x as u32).sum();
                d1.cmp(&d2).then_with(|| e1.cmp(e2))
            })
            .map(|(e, &c)| (e, c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn univariate_arith() {
        let p = Poly1(vec![1, 2]); // 1 + 2t
        let q = Poly1(vec![0, 1]); // t
        assert_eq!(p.mul(&q), Poly1(vec![0, 1, 2]));
        assert_eq!(p.add(&q), Poly1(vec![1, 3]));
        assert_eq!(Poly1::one_plus_t_pow(3), Poly1(vec![1, 3, 3, 1]));
        assert_eq!(Poly1::one_minus_t_pow(2), Poly1(vec![1, -2, 1]));
        assert_eq!(p.eval(10), 21);
    }

    #[test]
    fn multivariate_cancellation() {
        let mut p = MPoly::constant(2, 1);
        p.mul_one_minus_var(0); // 1 - x0
        p.mul_one_minus_var(1); // (1 - x0)(1 - x1)
        assert_eq!(p.num_terms(), 4);
        let mut q = MPoly::constant(2, 1);
        q.mul_one_minus_var(0);
        q.mul_one_minus_var(1);
        assert!(p.sub(&q).is_zero());
        let (e, c) = p.min_term().unwrap();
        assert_eq!((e.as_slice(), c), (&[0u16, 0u16][..], 1));
    }
}

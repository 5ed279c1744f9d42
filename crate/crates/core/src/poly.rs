//! Exact sparse polynomials over the integers in two variable families
//! `x_1..x_n` and `y_1..y_n`, with the divided-difference operators that
//! generate Demazure characters and atoms, plus degree-truncated kernel
//! products.

use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::traits::{One, Signed, ToPrimitive, Zero};

use crate::kernel::ShapeDiagram;
use crate::weyl::{orbit_data, Partition, WeakComposition};

/// Which variable family an operator acts on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    X,
    Y,
}

/// Exponent record of a single monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Exponents {
    pub x: Vec<u32>,
    pub y: Vec<u32>,
}

impl Exponents {
    fn zero(n: usize) -> Self {
        Exponents { x: vec![0; n], y: vec![0; n] }
    }

    pub fn total_degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.y.iter().sum::<u32>()
    }

    fn family(&self, fam: Family) -> &[u32] {
        match fam {
            Family::X => &self.x,
            Family::Y => &self.y,
        }
    }

    fn family_mut(&mut self, fam: Family) -> &mut Vec<u32> {
        match fam {
            Family::X => &mut self.x,
            Family::Y => &mut self.y,
        }
    }
}

/// Integer-coefficient polynomial; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePolynomial {
    n: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        let mut p = Self::zero(n);
        p.terms.insert(Exponents::zero(n), BigInt::one());
        p
    }

    /// The monomial `x^mu` (or `y^mu`).
    pub fn monomial(n: usize, fam: Family, mu: &WeakComposition) -> Self {
        assert!(mu.len() <= n, "weight longer than the variable family");
        let mut e = Exponents::zero(n);
        e.family_mut(fam)[..mu.len()].copy_from_slice(&mu.0);
        let mut p = Self::zero(n);
        p.terms.insert(e, BigInt::one());
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &Exponents) -> BigInt {
        self.terms.get(e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    fn insert(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &SparsePolynomial) {
        assert_eq!(self.n, other.n);
        for (e, c) in &other.terms {
            self.insert(e.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &SparsePolynomial) {
        assert_eq!(self.n, other.n);
        for (e, c) in &other.terms {
            self.insert(e.clone(), -c.clone());
        }
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.sub_assign(other);
        out
    }

    pub fn mul(&self, other: &SparsePolynomial) -> SparsePolynomial {
        self.mul_capped(other, None)
    }

    /// Product, discarding terms of total degree above `cap` when given.
    pub fn mul_capped(&self, other: &SparsePolynomial, cap: Option<u32>) -> SparsePolynomial {
        assert_eq!(self.n, other.n);
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = ea.clone();
                for (s, t) in e.x.iter_mut().zip(&eb.x) {
                    *s += t;
                }
                for (s, t) in e.y.iter_mut().zip(&eb.y) {
                    *s += t;
                }
                if let Some(cap) = cap {
                    if e.total_degree() > cap {
                        continue;
                    }
                }
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// Swap variables i, i+1 of one family in every term.
    pub fn swap_vars(&self, fam: Family, i: usize) -> SparsePolynomial {
        assert!(i >= 1 && i < self.n);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.family_mut(fam).swap(i - 1, i);
            out.insert(e, c.clone());
        }
        out
    }

    /// Reverse the variable order of one family: `z_i -> z_{n+1-i}`.
    pub fn reverse_vars(&self, fam: Family) -> SparsePolynomial {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e.family_mut(fam).reverse();
            out.insert(e, c.clone());
        }
        out
    }

    /// Whether the polynomial is symmetric in the given family.
    pub fn is_symmetric(&self, fam: Family) -> bool {
        (1..self.n).all(|i| self.swap_vars(fam, i) == *self)
    }

    /// Exact monomial-wise evaluation in double precision.
    pub fn evaluate(&self, x_point: &[f64], y_point: &[f64]) -> f64 {
        assert_eq!(x_point.len(), self.n, "x point length mismatch");
        assert_eq!(y_point.len(), self.n, "y point length mismatch");
        let mut acc = 0.0f64;
        for (e, c) in &self.terms {
            let mut m = c.to_f64().expect("coefficient fits in f64");
            for (v, &d) in x_point.iter().zip(&e.x) {
                m *= v.powi(d as i32);
            }
            for (v, &d) in y_point.iter().zip(&e.y) {
                m *= v.powi(d as i32);
            }
            acc += m;
        }
        acc
    }

    /// Evaluate a polynomial using only one family of variables.
    pub fn evaluate_family(&self, fam: Family, point: &[f64]) -> f64 {
        let zeros = vec![1.0; self.n];
        match fam {
            Family::X => self.evaluate(point, &zeros),
            Family::Y => self.evaluate(&zeros, point),
        }
    }

    /// Terms sorted by graded-lex order (degree, then x-exponents, then y).
    pub fn sorted_terms(&self) -> Vec<(Exponents, BigInt)> {
        let mut v: Vec<(Exponents, BigInt)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| {
            a.0.total_degree()
                .cmp(&b.0.total_degree())
                .then_with(|| a.0.cmp(&b.0))
        });
        v
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if !c.is_one() || e.total_degree() == 0 {
                write!(f, "{c}")?;
            }
            for (k, &d) in e.x.iter().enumerate() {
                if d > 0 {
                    write!(f, "·x{}^{}", k + 1, d)?;
                }
            }
            for (k, &d) in e.y.iter().enumerate() {
                if d > 0 {
                    write!(f, "·y{}^{}", k + 1, d)?;
                }
            }
        }
        Ok(())
    }
}

/// Divided difference `D_i P = (z_i P - z_{i+1} (s_i P)) / (z_i - z_{i+1})`
/// on the chosen family, computed monomial-wise as an exact geometric ladder.
pub fn divided_difference(fam: Family, i: usize, p: &SparsePolynomial) -> SparsePolynomial {
    assert!(i >= 1 && i < p.n(), "reflection index out of range");
    let mut out = SparsePolynomial::zero(p.n());
    for (e, c) in p.terms.clone() {
        let a = e.family(fam)[i - 1];
        let b = e.family(fam)[i];
        if a >= b {
            // (z_i^{a+1} z_{i+1}^b - z_i^b z_{i+1}^{a+1}) / (z_i - z_{i+1})
            for t in 0..=(a - b) {
                let mut e2 = e.clone();
                e2.family_mut(fam)[i - 1] = a - t;
                e2.family_mut(fam)[i] = b + t;
                out.insert(e2, c.clone());
            }
        } else if b > a + 1 {
            for t in 0..=(b - a - 2) {
                let mut e2 = e.clone();
                e2.family_mut(fam)[i - 1] = b - 1 - t;
                e2.family_mut(fam)[i] = a + 1 + t;
                out.insert(e2, -c.clone());
            }
        }
        // b == a + 1 contributes nothing
    }
    out
}

/// The atom operator `D'_i = D_i - id`; satisfies `(D'_i)^2 = -D'_i`.
pub fn atom_operator(fam: Family, i: usize, p: &SparsePolynomial) -> SparsePolynomial {
    let mut out = divided_difference(fam, i, p);
    out.sub_assign(p);
    out
}

/// Apply a word of divided differences, rightmost letter first.
pub fn apply_divided_differences(
    fam: Family,
    word: &[usize],
    p: &SparsePolynomial,
) -> SparsePolynomial {
    let mut out = p.clone();
    for &i in word.iter().rev() {
        out = divided_difference(fam, i, &out);
    }
    out
}

/// Demazure character: apply `D` along the minimal representative's word to
/// the dominant monomial in the orbit of `mu`.
pub fn demazure_char(n: usize, fam: Family, mu: &WeakComposition) -> SparsePolynomial {
    assert!(mu.len() <= n);
    let full = mu.padded(n);
    let (lambda, sigma) = orbit_data(&full);
    let word = sigma.canonical_reduced_word();
    apply_divided_differences(fam, &word, &SparsePolynomial::monomial(n, fam, lambda.as_composition()))
}

/// Demazure atom: same word, applied through `D'` instead of `D`.
pub fn demazure_atom(n: usize, fam: Family, mu: &WeakComposition) -> SparsePolynomial {
    assert!(mu.len() <= n);
    let full = mu.padded(n);
    let (lambda, sigma) = orbit_data(&full);
    let word = sigma.canonical_reduced_word();
    let mut p = SparsePolynomial::monomial(n, fam, lambda.as_composition());
    for &i in word.iter().rev() {
        p = atom_operator(fam, i, &p);
    }
    p
}

/// Schur polynomial in `n` variables as the extreme Demazure character.
pub fn schur(lambda: &Partition, n: usize, fam: Family) -> SparsePolynomial {
    let full = lambda.padded(n);
    demazure_char(n, fam, &full.as_composition().reversed())
}

/// A polynomial with every term capped at a fixed total degree.
///
/// Arithmetic discards over-cap terms at each step, which keeps term counts
/// polynomial in the cap during long products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    poly: SparsePolynomial,
    degree_cap: u32,
}

impl TruncatedSeries {
    pub fn one(n: usize, degree_cap: u32) -> Self {
        TruncatedSeries { poly: SparsePolynomial::one(n), degree_cap }
    }

    pub fn from_poly(poly: SparsePolynomial, degree_cap: u32) -> Self {
        let mut kept = SparsePolynomial::zero(poly.n());
        for (e, c) in poly.terms {
            if e.total_degree() <= degree_cap {
                kept.insert(e, c);
            }
        }
        TruncatedSeries { poly: kept, degree_cap }
    }

    pub fn degree_cap(&self) -> u32 {
        self.degree_cap
    }

    pub fn poly(&self) -> &SparsePolynomial {
        &self.poly
    }

    pub fn into_poly(self) -> SparsePolynomial {
        self.poly
    }

    pub fn mul(&self, other: &SparsePolynomial) -> TruncatedSeries {
        TruncatedSeries {
            poly: self.poly.mul_capped(other, Some(self.degree_cap)),
            degree_cap: self.degree_cap,
        }
    }
}

/// Expansion of `prod_{(i,j) in shape} 1/(1 - x_i y_j)` over all matrices
/// supported on the shape with entry sum at most `sum_cap`.
pub fn kernel_expansion(shape: &ShapeDiagram, sum_cap: u32, n: usize) -> TruncatedSeries {
    // one unit of matrix entry contributes degree 2 (an x and a y)
    let mut acc = TruncatedSeries::one(n, 2 * sum_cap);
    for &(i, j) in shape.cells() {
        assert!(i >= 1 && i <= n && j >= 1 && j <= n, "cell outside the variable range");
        let mut factor = SparsePolynomial::zero(n);
        for a in 0..=sum_cap {
            let mut e = Exponents::zero(n);
            e.x[i - 1] = a;
            e.y[j - 1] = a;
            factor.insert(e, BigInt::one());
        }
        acc = acc.mul(&factor);
    }
    acc
}

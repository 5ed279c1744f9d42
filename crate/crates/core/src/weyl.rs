//! Weak compositions, the symmetric group as a Coxeter system, bubble-sort
//! operators, Bruhat order, and parabolic projection through the Coxeter
//! monoid.
//!
//! Simple reflections are indexed `1..n` throughout (an index `i` swaps
//! positions `i` and `i+1`); one-line notation stores the values `1..=n`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::MAX_RANK;

/// A finite sequence of nonnegative integers; the weight vectors μ, α.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeakComposition(pub Vec<u32>);

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "weight vectors have length >= 1");
        WeakComposition(entries)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Extend with trailing zeros up to length `n`.
    pub fn padded(&self, n: usize) -> WeakComposition {
        assert!(n >= self.len());
        let mut v = self.0.clone();
        v.resize(n, 0);
        WeakComposition(v)
    }

    /// Entries in reverse order; the action of the longest element.
    pub fn reversed(&self) -> WeakComposition {
        let mut v = self.0.clone();
        v.reverse();
        WeakComposition(v)
    }

    /// Weakly decreasing reordering.
    pub fn sorted_desc(&self) -> Partition {
        let mut v = self.0.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(WeakComposition(v))
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }
}

impl fmt::Debug for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A weakly decreasing weak composition.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Partition(WeakComposition);

impl Partition {
    pub fn new(entries: Vec<u32>) -> Self {
        let c = WeakComposition::new(entries);
        assert!(c.is_partition(), "entries must be weakly decreasing");
        Partition(c)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0 .0
    }

    pub fn as_composition(&self) -> &WeakComposition {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.total()
    }

    pub fn padded(&self, n: usize) -> Partition {
        Partition(self.0.padded(n))
    }

    /// Number of cells in column `c` (1-based), i.e. `#{i : λ_i >= c}`.
    pub fn column_height(&self, c: u32) -> usize {
        self.entries().iter().filter(|&&e| e >= c).count()
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Bubble-sort operator π_i: swap entries i, i+1 when the left one is larger.
pub fn bubble_sort(i: usize, alpha: &WeakComposition) -> WeakComposition {
    assert!(i >= 1 && i < alpha.len(), "reflection index out of range");
    let mut v = alpha.0.clone();
    if v[i - 1] > v[i] {
        v.swap(i - 1, i);
    }
    WeakComposition(v)
}

/// Apply a π-word to a weight, rightmost letter first.
pub fn apply_pi_word(word: &[usize], alpha: &WeakComposition) -> WeakComposition {
    let mut v = alpha.clone();
    for &i in word.iter().rev() {
        v = bubble_sort(i, &v);
    }
    v
}

/// A word in the simple reflections, tagged with whether it is reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub reduced: bool,
}

impl ReducedWord {
    pub fn reduced(letters: Vec<usize>) -> Self {
        ReducedWord { letters, reduced: true }
    }
}

/// An element of the symmetric group in one-line notation (values `1..=n`).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_RANK, "rank must be in 1..={MAX_RANK}");
        Permutation { one_line: (1..=n).collect() }
    }

    pub fn from_one_line(one_line: Vec<usize>) -> Self {
        let n = one_line.len();
        assert!(n >= 1 && n <= MAX_RANK, "rank must be in 1..={MAX_RANK}");
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            assert!(v >= 1 && v <= n && !seen[v], "not a permutation of 1..={n}");
            seen[v] = true;
        }
        Permutation { one_line }
    }

    pub fn simple(i: usize, n: usize) -> Self {
        let mut p = Permutation::identity(n);
        assert!(i >= 1 && i < n);
        p.one_line.swap(i - 1, i);
        p
    }

    /// The longest element, i ↦ n+1-i.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1 && n <= MAX_RANK);
        Permutation { one_line: (1..=n).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    pub fn apply(&self, j: usize) -> usize {
        self.one_line[j - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.one_line.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.one_line;
        let mut inv = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.n()];
        for (pos, &val) in self.one_line.iter().enumerate() {
            inv[val - 1] = pos + 1;
        }
        Permutation { one_line: inv }
    }

    /// Composition (`self` after `other`): `(self * other)(j) = self(other(j))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n());
        Permutation {
            one_line: (1..=self.n()).map(|j| self.apply(other.apply(j))).collect(),
        }
    }

    /// Right multiplication by s_i; increases length iff `self(i) < self(i+1)`.
    pub fn mul_simple_right(&self, i: usize) -> Permutation {
        assert!(i >= 1 && i < self.n());
        let mut v = self.one_line.clone();
        v.swap(i - 1, i);
        Permutation { one_line: v }
    }

    /// Natural action on weights: `(σ·v)_{σ(j)} = v_j`.
    pub fn act(&self, v: &WeakComposition) -> WeakComposition {
        assert_eq!(self.n(), v.len());
        let mut out = vec![0; v.len()];
        for j in 1..=self.n() {
            out[self.apply(j) - 1] = v.0[j - 1];
        }
        WeakComposition(out)
    }

    /// Whether the permutation fixes every point above `p`.
    pub fn fixes_above(&self, p: usize) -> bool {
        (p + 1..=self.n()).all(|j| self.apply(j) == j)
    }

    /// Canonical reduced word, produced by repeatedly clearing the leftmost
    /// descent. Deterministic, so tests can freeze expected words.
    pub fn canonical_reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut picked = Vec::new();
        'outer: loop {
            for i in 1..w.n() {
                if w.apply(i) > w.apply(i + 1) {
                    picked.push(i);
                    w = w.mul_simple_right(i);
                    continue 'outer;
                }
            }
            break;
        }
        picked.reverse();
        picked
    }

    /// Evaluate a word of simple reflections as a group element.
    pub fn from_word(word: &[usize], n: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        for &i in word {
            p = p.mul_simple_right(i);
        }
        p
    }

    /// All reduced words, by peeling left descents. Exponential; test use only.
    pub fn all_reduced_words(&self) -> Vec<Vec<usize>> {
        if self.is_identity() {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..self.n() {
            // left descent: l(s_i w) < l(w) iff w^{-1}(i) > w^{-1}(i+1)
            let winv = self.inverse();
            if winv.apply(i) > winv.apply(i + 1) {
                let rest = Permutation::simple(i, self.n()).compose(self);
                for mut word in rest.all_reduced_words() {
                    let mut full = vec![i];
                    full.append(&mut word);
                    out.push(full);
                }
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.one_line)
    }
}

/// Evaluate a word in the Coxeter monoid: `u * s = us` if the length goes up,
/// otherwise `u`.
pub fn demazure_product(word: &[usize], n: usize) -> Permutation {
    let mut u = Permutation::identity(n);
    for &i in word {
        if u.apply(i) < u.apply(i + 1) {
            u = u.mul_simple_right(i);
        }
    }
    u
}

/// Parabolic projection: delete the letters of a reduced word of `sigma`
/// lying outside `subset`, then evaluate in the Coxeter monoid. Independent
/// of the chosen reduced word.
pub fn parabolic_project(sigma: &Permutation, subset: &[usize]) -> Permutation {
    let word = sigma.canonical_reduced_word();
    let kept: Vec<usize> = word.into_iter().filter(|i| subset.contains(i)).collect();
    demazure_product(&kept, sigma.n())
}

/// Strong Bruhat order via the sorted-prefix dominance criterion.
pub fn bruhat_leq(u: &Permutation, v: &Permutation) -> bool {
    assert_eq!(u.n(), v.n());
    let n = u.n();
    for k in 1..n {
        let mut pu: Vec<usize> = u.one_line[..k].to_vec();
        let mut pv: Vec<usize> = v.one_line[..k].to_vec();
        pu.sort_unstable();
        pv.sort_unstable();
        if pu.iter().zip(&pv).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// Scan a π-word right to left, deleting letters that act trivially.
///
/// The surviving word is reduced and evaluates to the minimal-length coset
/// representative whose action on `lambda` matches that of the input word.
pub fn minimal_rep_word(word: &[usize], lambda: &Partition) -> ReducedWord {
    let mut v = lambda.as_composition().clone();
    let mut kept = Vec::new();
    for &j in word.iter().rev() {
        assert!(j >= 1 && j < v.len(), "reflection index out of range");
        if v.0[j - 1] > v.0[j] {
            kept.push(j);
            v.0.swap(j - 1, j);
        }
    }
    kept.reverse();
    ReducedWord::reduced(kept)
}

/// Sort `mu` into a partition and return the minimal-length permutation
/// carrying the partition back onto `mu`.
///
/// Equal entries keep their relative order, which is exactly what makes the
/// representative minimal.
pub fn orbit_data(mu: &WeakComposition) -> (Partition, Permutation) {
    let lambda = mu.sorted_desc();
    let n = mu.len();
    let mut used = vec![false; n];
    let mut sigma_inv = vec![0usize; n];
    for (i, &m) in mu.0.iter().enumerate() {
        let j = lambda
            .entries()
            .iter()
            .enumerate()
            .position(|(j, &l)| !used[j] && l == m)
            .expect("entry must occur in the sorted weight");
        used[j] = true;
        sigma_inv[i] = j + 1;
    }
    let sigma = Permutation { one_line: sigma_inv }.inverse();
    debug_assert_eq!(&sigma.act(lambda.as_composition()), mu);
    (lambda, sigma)
}

/// Minimal coset representative of `sigma` modulo the stabilizer of `lambda`.
pub fn minimal_coset_rep(sigma: &Permutation, lambda: &Partition) -> Permutation {
    let mu = sigma.act(lambda.as_composition());
    orbit_data(&mu).1
}

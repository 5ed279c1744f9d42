//! Restricted supports for the kernel identities: staircase, truncated and
//! augmented staircase shapes, their diagonal reading words, the two routes
//! to the projected weight μ̃, and coefficient-exact verifiers for the three
//! kernel factorizations.
//!
//! Matrix coordinates are used throughout: cell `(i, j)` is row `i` from the
//! top, column `j` from the left, and a partition shape is anchored at the
//! bottom of the `n x n` square (row `n` carries the largest part).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::weyl::{
    apply_pi_word, demazure_product, orbit_data, Partition, Permutation, WeakComposition,
};

/// A set of matrix cells inside an `rows x cols` rectangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeDiagram {
    rows: usize,
    cols: usize,
    cells: Vec<(usize, usize)>,
}

impl ShapeDiagram {
    pub fn from_cells(n: usize, cells: Vec<(usize, usize)>) -> Self {
        let set: BTreeSet<(usize, usize)> = cells.into_iter().collect();
        for &(i, j) in &set {
            assert!(i >= 1 && i <= n && j >= 1 && j <= n, "cell out of range");
        }
        ShapeDiagram { rows: n, cols: n, cells: set.into_iter().collect() }
    }

    /// Full `m x n` rectangle.
    pub fn rectangle(m: usize, n: usize) -> Self {
        let mut cells = Vec::new();
        for i in 1..=m {
            for j in 1..=n {
                cells.push((i, j));
            }
        }
        ShapeDiagram { rows: m, cols: n, cells }
    }

    /// Lower-triangular staircase `{(i, j) : j <= i}` in the `n x n` square.
    pub fn staircase(n: usize) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::InvalidParameters("staircase needs n >= 1".into()));
        }
        let mut cells = Vec::new();
        for i in 1..=n {
            for j in 1..=i {
                cells.push((i, j));
            }
        }
        Ok(ShapeDiagram { rows: n, cols: n, cells })
    }

    /// The staircase truncated to the bottom `p` rows and first `q` columns.
    pub fn truncated(n: usize, p: usize, q: usize) -> Result<Self, Error> {
        if !(1 <= p && p <= q && q <= n) {
            return Err(Error::InvalidParameters(format!(
                "need 1 <= p <= q <= n, got n={n} p={p} q={q}"
            )));
        }
        if n - p + 1 > q {
            return Err(Error::InvalidParameters(format!(
                "need n-p+1 <= q for a truncated staircase, got n={n} p={p} q={q}"
            )));
        }
        let mut cells = Vec::new();
        for i in n - p + 1..=n {
            for j in 1..=q.min(i) {
                cells.push((i, j));
            }
        }
        Ok(ShapeDiagram { rows: n, cols: n, cells })
    }

    /// Partition shape anchored at the bottom of the `n x n` square: matrix
    /// row `i` holds the part `lambda_{n+1-i}`.
    pub fn from_partition(lambda: &Partition, n: usize) -> Result<Self, Error> {
        if lambda.len() > n || lambda.entries().first().copied().unwrap_or(0) as usize > n {
            return Err(Error::InvalidParameters(format!(
                "partition {lambda:?} does not fit in a {n} x {n} square"
            )));
        }
        let mut cells = Vec::new();
        for (k, &part) in lambda.entries().iter().enumerate() {
            let i = n - k; // part k+1 sits in matrix row n-k
            for j in 1..=part as usize {
                cells.push((i, j));
            }
        }
        cells.sort_unstable();
        Ok(ShapeDiagram { rows: n, cols: n, cells })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn cells(&self) -> &[(usize, usize)] {
        &self.cells
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.cells.binary_search(&(i, j)).is_ok()
    }

    pub fn transpose(&self) -> ShapeDiagram {
        let mut cells: Vec<(usize, usize)> = self.cells.iter().map(|&(i, j)| (j, i)).collect();
        cells.sort_unstable();
        ShapeDiagram { rows: self.cols, cols: self.rows, cells }
    }
}

/// The truncated-staircase partition `(q^{n-q+1}, q-1, ..., n-p+1)`.
pub fn truncated_partition(n: usize, p: usize, q: usize) -> Result<Partition, Error> {
    if !(1 <= p && p <= q && q <= n && n - p + 1 <= q) {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= p <= q <= n and n-p+1 <= q, got n={n} p={p} q={q}"
        )));
    }
    let mut parts = vec![q as u32; n - q + 1];
    let mut next = q as u32 - 1;
    while parts.len() < p {
        parts.push(next);
        next -= 1;
    }
    debug_assert_eq!(parts.last().copied(), Some((n - p + 1) as u32));
    Ok(Partition::new(parts))
}

/// Reading words of the two filled regions of a partition relative to the
/// staircase it contains and a chosen pivot box of the augmented staircase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReadingWords {
    pub nw_word: Vec<usize>,
    pub se_word: Vec<usize>,
    /// Side length of the largest staircase inside the partition.
    pub m: usize,
}

/// Largest `m` with `(m, m-1, ..., 1)` contained in `lambda` (Cartesian rows,
/// bottom row = first part).
pub fn largest_staircase(lambda: &Partition) -> usize {
    let mut m = 0;
    loop {
        let k = m + 1;
        if k > lambda.len() || (0..k).any(|i| (lambda.entries()[i] as usize) < k - i) {
            break;
        }
        m = k;
    }
    m
}

/// Compute the NW and SE reading words of `lambda` split by the diagonal
/// through `pivot` (Cartesian coordinates: row 1 at the bottom).
///
/// The pivot must be a box of the augmented staircase `(m+1, m, ..., 1)`
/// that does not lie in `lambda`.
pub fn reading_words(
    lambda: &Partition,
    n: usize,
    pivot: (usize, usize),
) -> Result<ReadingWords, Error> {
    if lambda.entries().first().copied().unwrap_or(0) as usize > n || lambda.len() > n {
        return Err(Error::InvalidParameters(format!(
            "partition {lambda:?} does not fit in rank {n}"
        )));
    }
    let m = largest_staircase(lambda);
    let (pi, pj) = pivot;
    let in_lambda = |i: usize, j: usize| -> bool {
        i >= 1 && i <= lambda.len() && j >= 1 && j <= lambda.entries()[i - 1] as usize
    };
    let in_augmented = pi >= 1 && pi <= m + 1 && pj >= 1 && pj + pi <= m + 2;
    if !in_augmented || in_lambda(pi, pj) {
        return Err(Error::InvalidParameters(format!(
            "pivot {pivot:?} is not an augmented-staircase box outside the partition"
        )));
    }
    let diag = pj as isize - pi as isize;

    // filled boxes: lambda minus its largest staircase
    let mut nw = Vec::new(); // (cartesian row, col)
    let mut se = Vec::new();
    for i in 1..=lambda.len() {
        let stair_len = if i <= m { m + 1 - i } else { 0 };
        for j in stair_len + 1..=lambda.entries()[i - 1] as usize {
            let d = j as isize - i as isize;
            assert_ne!(d, diag, "filled box on the pivot diagonal");
            if d < diag {
                nw.push((i, j));
            } else {
                se.push((i, j));
            }
        }
    }

    // NW: columns right to left, each column top to bottom, filled with
    // (cartesian row - 1)
    nw.sort_by(|a, b| b.1.cmp(&a.1).then(b.0.cmp(&a.0)));
    let nw_word: Vec<usize> = nw.iter().map(|&(i, _)| i - 1).collect();

    // SE: rows top to bottom, each row right to left, filled with (col - 1)
    se.sort_by(|a, b| b.0.cmp(&a.0).then(b.1.cmp(&a.1)));
    let se_word: Vec<usize> = se.iter().map(|&(_, j)| j - 1).collect();

    for &l in nw_word.iter().chain(&se_word) {
        if l == 0 || l >= n {
            return Err(Error::InvalidParameters(
                "reading word letter out of range; partition too large for rank".into(),
            ));
        }
    }
    Ok(ReadingWords { nw_word, se_word, m })
}

/// SE reading word of the truncated staircase, with the pivot at the
/// top-left augmentation corner `(p+1, 1)`.
pub fn truncated_se_word(n: usize, p: usize, q: usize) -> Result<Vec<usize>, Error> {
    let lambda = truncated_partition(n, p, q)?;
    Ok(reading_words(&lambda, n, (p + 1, 1))?.se_word)
}

/// μ̃ from the definition: project the minimal representative of
/// `sigma_0 tau` onto the generators `1..q` and act on the sorted weight.
pub fn mu_tilde_def(mu: &WeakComposition, n: usize, q: usize) -> WeakComposition {
    let p = mu.len();
    assert!(p <= q && q <= n, "need p <= q <= n");
    let padded = mu.padded(n);
    let reversed = Permutation::longest(n).act(&padded);
    let (lambda, sigma) = orbit_data(&reversed);
    let subset: Vec<usize> = (1..q).collect();
    let projected = crate::weyl::parabolic_project(&sigma, &subset);
    let word = projected.canonical_reduced_word();
    apply_pi_word(&word, lambda.as_composition())
}

/// μ̃ by the southeast scan: repeatedly take the maximum of a sliding window
/// of the reversed weight, ignoring one copy of each value already chosen.
pub fn mu_tilde_fast(mu: &WeakComposition, n: usize, p: usize, q: usize) -> Result<WeakComposition, Error> {
    if mu.len() != p {
        return Err(Error::DimensionMismatch { expected: p, got: mu.len() });
    }
    if !(1 <= p && p <= q && q <= n && n + 1 <= q + p) {
        return Err(Error::InvalidParameters(format!(
            "need n-q+1 <= p <= q <= n, got n={n} p={p} q={q}"
        )));
    }
    let reversed: Vec<u32> = mu.0.iter().rev().copied().collect();
    let mut alpha = vec![0u32; p];
    for i in (1..=p).rev() {
        let mut remaining = reversed.clone();
        for j in i + 1..=p {
            // drop the rightmost remaining entry equal to alpha_j
            if let Some(pos) = remaining.iter().rposition(|&e| e == alpha[j - 1]) {
                remaining.remove(pos);
            }
        }
        let k = i.min(n - q + 1);
        let tail = &remaining[remaining.len() - k.min(remaining.len())..];
        alpha[i - 1] = tail.iter().copied().max().unwrap_or(0);
    }
    let mut out = vec![0u32; q - p];
    out.extend_from_slice(&alpha);
    out.resize(n, 0);
    Ok(WeakComposition::new(out))
}

/// Verification outcome for one kernel identity check.
#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub shape: String,
    pub degree_cap: u32,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
    pub counts: VerifyCounts,
}

#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyCounts {
    pub lhs_terms: usize,
    pub blocks: usize,
}

impl VerifyReport {
    pub fn ok(&self) -> bool {
        self.status == "ok"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wc(v: &[u32]) -> WeakComposition {
        WeakComposition::new(v.to_vec())
    }

    #[test]
    fn shape_constructors() {
        let s = ShapeDiagram::staircase(2).unwrap();
        assert_eq!(s.cells(), &[(1, 1), (2, 1), (2, 2)]);

        for n in 1..=5 {
            assert_eq!(ShapeDiagram::truncated(n, n, n).unwrap(), ShapeDiagram::staircase(n).unwrap());
        }

        // truncated shape equals its partition description
        for n in 2..=6usize {
            for p in 1..=n {
                for q in p..=n {
                    if n - p + 1 > q {
                        assert!(ShapeDiagram::truncated(n, p, q).is_err());
                        continue;
                    }
                    let direct = ShapeDiagram::truncated(n, p, q).unwrap();
                    let part = truncated_partition(n, p, q).unwrap();
                    assert_eq!(part.len(), p);
                    let via = ShapeDiagram::from_partition(&part, n).unwrap();
                    assert_eq!(direct, via, "n={n} p={p} q={q}");
                }
            }
        }

        assert!(ShapeDiagram::truncated(5, 0, 3).is_err());
        assert!(ShapeDiagram::truncated(5, 4, 3).is_err());
    }

    #[test]
    fn reading_words_worked_example() {
        let lambda = Partition::new(vec![7, 4, 2, 2, 2]);
        let words = reading_words(&lambda, 8, (3, 3)).unwrap();
        assert_eq!(words.m, 4);
        assert_eq!(words.nw_word, vec![4, 3, 4]);
        assert_eq!(words.se_word, vec![3, 6, 5, 4]);
    }

    #[test]
    fn reading_words_full_staircase_empty() {
        let lambda = Partition::new(vec![3, 2, 1]);
        let words = reading_words(&lambda, 3, (4, 1)).unwrap();
        assert!(words.nw_word.is_empty());
        assert!(words.se_word.is_empty());
    }

    #[test]
    fn reading_words_rejects_bad_pivot() {
        let lambda = Partition::new(vec![3, 1]);
        assert!(reading_words(&lambda, 3, (1, 1)).is_err()); // inside lambda
        assert!(reading_words(&lambda, 3, (5, 5)).is_err()); // outside augmented staircase
    }

    #[test]
    fn truncated_se_word_matches_product_formula() {
        // product formula for the SE word of the truncated staircase
        fn formula(n: usize, p: usize, q: usize) -> Vec<usize> {
            let mut w = Vec::new();
            let lo = n as isize - q as isize; // n-q, so p-(n-q)-1 = p-lo-1
            for i in 1..=(p as isize - lo - 1) {
                let top = i + n as isize - p as isize - 1;
                for l in (i..=top).rev() {
                    w.push(l as usize);
                }
            }
            for i in 0..=(n - q) as isize {
                let bottom = p as isize - lo + i;
                for l in (bottom..=q as isize - 1).rev() {
                    w.push(l as usize);
                }
            }
            w
        }
        for n in 2..=7usize {
            for p in 1..=n {
                for q in p..=n {
                    if n - p + 1 > q || p + 1 > n {
                        continue;
                    }
                    let read = truncated_se_word(n, p, q).unwrap();
                    assert_eq!(read, formula(n, p, q), "n={n} p={p} q={q}");
                }
            }
        }
        assert_eq!(truncated_se_word(6, 4, 5).unwrap(), vec![2, 1, 3, 2, 4, 3, 4]);
    }

    #[test]
    fn mu_tilde_examples() {
        assert_eq!(mu_tilde_def(&wc(&[1, 3, 2]), 5, 4), wc(&[0, 1, 2, 3, 0]));
        assert_eq!(mu_tilde_fast(&wc(&[1, 3, 2]), 5, 3, 4).unwrap(), wc(&[0, 1, 2, 3, 0]));

        assert_eq!(mu_tilde_def(&wc(&[2, 1, 2, 3]), 6, 5), wc(&[0, 1, 3, 2, 2, 0]));
        assert_eq!(mu_tilde_fast(&wc(&[2, 1, 2, 3]), 6, 4, 5).unwrap(), wc(&[0, 1, 3, 2, 2, 0]));

        assert_eq!(mu_tilde_def(&wc(&[1, 2, 3, 2]), 6, 5), wc(&[0, 1, 2, 3, 2, 0]));
        assert_eq!(mu_tilde_fast(&wc(&[1, 2, 3, 2]), 6, 4, 5).unwrap(), wc(&[0, 1, 2, 3, 2, 0]));

        // partitions with p = q = n reverse
        let mu = wc(&[3, 1, 0]);
        assert_eq!(mu_tilde_def(&mu, 3, 3), wc(&[0, 1, 3]));
    }

    #[test]
    fn mu_tilde_routes_agree() {
        fn compositions(len: usize, max: u32) -> Vec<Vec<u32>> {
            let mut out = vec![vec![]];
            for _ in 0..len {
                out = out
                    .into_iter()
                    .flat_map(|v: Vec<u32>| {
                        (0..=max).map(move |e| {
                            let mut w = v.clone();
                            w.push(e);
                            w
                        })
                    })
                    .collect();
            }
            out
        }
        for n in 2..=6usize {
            for p in 1..=4.min(n) {
                for q in p..=n {
                    if n + 1 > q + p {
                        continue;
                    }
                    for mu in compositions(p, 3) {
                        let mu = WeakComposition::new(mu);
                        let fast = mu_tilde_fast(&mu, n, p, q).unwrap();
                        let def = mu_tilde_def(&mu, n, q);
                        assert_eq!(fast, def, "n={n} p={p} q={q} mu={mu:?}");
                    }
                }
            }
        }
    }
}

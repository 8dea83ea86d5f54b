//! Index rearrangements of operators on `2k` parties of local dimension `d`.
//!
//! A matrix of order `d^k` is read as a tensor with `2k` legs: legs
//! `0..k` index rows and legs `k..2k` index columns, most significant leg
//! first, so row `j = a·d + b` for `k = 2`. A [`Bipartition`] chooses which
//! `k` legs become rows of the rearranged matrix.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcore::CMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TensorShape {
    d: usize,
    k: usize,
}

impl TensorShape {
    pub fn new(d: usize, k: usize) -> Result<Self> {
        if d < 2 || k < 1 {
            return Err(Error::Domain(format!(
                "tensor shape needs d ≥ 2 and k ≥ 1, got ({d}, {k})"
            )));
        }
        d.checked_pow(k as u32)
            .ok_or_else(|| Error::Domain(format!("d^k overflows for ({d}, {k})")))?;
        Ok(TensorShape { d, k })
    }

    /// Shape of a bipartite operator of order `d²`.
    pub fn bipartite(d: usize) -> Result<Self> {
        Self::new(d, 2)
    }

    pub fn d(self) -> usize {
        self.d
    }

    pub fn k(self) -> usize {
        self.k
    }

    /// Matrix order `d^k`.
    pub fn order(self) -> usize {
        self.d.pow(self.k as u32)
    }

    pub fn parties(self) -> usize {
        2 * self.k
    }

    fn check(self, x: &CMatrix) -> Result<()> {
        if x.order() != self.order() {
            return Err(Error::shape(
                format!("order {} = {}^{}", self.order(), self.d, self.k),
                x.order(),
            ));
        }
        Ok(())
    }
}

/// A balanced split of `2k` legs, stored by its row legs. A set and its
/// complement describe the same split up to a global transpose; the stored
/// form always contains leg 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Bipartition {
    rows: Vec<usize>,
}

impl Bipartition {
    pub fn new(k: usize, rows: &[usize]) -> Result<Self> {
        let mut r = rows.to_vec();
        r.sort_unstable();
        r.dedup();
        if r.len() != k || r.iter().any(|&l| l >= 2 * k) {
            return Err(Error::Domain(format!(
                "{rows:?} is not a set of {k} distinct legs out of {}",
                2 * k
            )));
        }
        if r.first() != Some(&0) {
            r = (0..2 * k).filter(|l| !r.contains(l)).collect();
        }
        Ok(Bipartition { rows: r })
    }

    pub fn identity(k: usize) -> Self {
        Bipartition { rows: (0..k).collect() }
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    /// Output leg order. Row legs already in the row half keep their slots;
    /// the remaining ones are exchanged pairwise (ascending) with the column
    /// legs they displace. For `k = 2` this yields identity, `R` and `Γ`.
    pub fn leg_order(&self) -> Vec<usize> {
        let k = self.k();
        let mut order: Vec<usize> = (0..2 * k).collect();
        let out_of_rows = (0..k).filter(|l| !self.rows.contains(l));
        let into_rows = self.rows.iter().copied().filter(|&l| l >= k);
        for (a, b) in out_of_rows.zip(into_rows) {
            order.swap(a, b);
        }
        order
    }
}

/// All balanced bipartitions of `2k` legs, one per complementary pair, in
/// lexicographic order of their row sets (the identity split first).
pub fn balanced_bipartitions(k: usize) -> Vec<Bipartition> {
    assert!(k >= 1, "k must be positive");
    let mut out = Vec::new();
    let mut cur = vec![0usize];
    fn rec(k: usize, next: usize, cur: &mut Vec<usize>, out: &mut Vec<Bipartition>) {
        if cur.len() == k {
            out.push(Bipartition { rows: cur.clone() });
            return;
        }
        for l in next..2 * k {
            cur.push(l);
            rec(k, l + 1, cur, out);
            cur.pop();
        }
    }
    rec(k, 1, &mut cur, &mut out);
    out
}

fn check_bipartite(x: &CMatrix, d: usize) -> Result<()> {
    if d == 0 || x.order() != d * d {
        return Err(Error::shape(format!("order {}", d * d), x.order()));
    }
    Ok(())
}

/// `X^R_{ab;cd} = X_{ac;bd}`.
pub fn reshuffle(x: &CMatrix, d: usize) -> Result<CMatrix> {
    check_bipartite(x, d)?;
    Ok(CMatrix::from_fn(d * d, |r, c| {
        let (a, b, cc, dd) = (r / d, r % d, c / d, c % d);
        x[(a * d + cc, b * d + dd)]
    }))
}

/// `X^Γ_{ab;cd} = X_{ad;cb}`: transpose of the second factor.
pub fn partial_transpose(x: &CMatrix, d: usize) -> Result<CMatrix> {
    check_bipartite(x, d)?;
    Ok(CMatrix::from_fn(d * d, |r, c| {
        let (a, b, cc, dd) = (r / d, r % d, c / d, c % d);
        x[(a * d + dd, cc * d + b)]
    }))
}

/// Reads `u` as a `2k`-leg tensor and flattens it along `b`.
pub fn rearrange(u: &CMatrix, shape: TensorShape, b: &Bipartition) -> Result<CMatrix> {
    shape.check(u)?;
    if b.k() != shape.k() {
        return Err(Error::shape(
            format!("bipartition of {} legs", shape.parties()),
            2 * b.k(),
        ));
    }
    let (d, k, n) = (shape.d(), shape.k(), shape.order());
    let order = b.leg_order();
    // stride of each input leg inside the flattened (row, col) pair
    let strides: Vec<usize> = (0..2 * k).map(|leg| d.pow((k - 1 - leg % k) as u32)).collect();
    let mut out = CMatrix::zeros(n);
    let mut digits = vec![0usize; 2 * k];
    for r in 0..n {
        for c in 0..n {
            // digits of the output multi-index, output position p
            let mut rem = r;
            for p in (0..k).rev() {
                digits[p] = rem % d;
                rem /= d;
            }
            let mut rem = c;
            for p in (k..2 * k).rev() {
                digits[p] = rem % d;
                rem /= d;
            }
            let (mut ir, mut ic) = (0, 0);
            for (p, &leg) in order.iter().enumerate() {
                if leg < k {
                    ir += digits[p] * strides[leg];
                } else {
                    ic += digits[p] * strides[leg];
                }
            }
            out[(r, c)] = u[(ir, ic)];
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{Tolerance, C64};
    use proptest::prelude::*;

    fn random_matrix(n: usize, seed: u64) -> CMatrix {
        // small LCG; only needs to be deterministic
        let mut s = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        let mut next = move || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 11) as f64 / (1u64 << 53) as f64) * 2.0 - 1.0
        };
        CMatrix::from_fn(n, |_, _| C64::new(next(), next()))
    }

    #[test]
    fn bipartition_counts() {
        assert_eq!(balanced_bipartitions(1).len(), 1);
        assert_eq!(balanced_bipartitions(2).len(), 3);
        assert_eq!(balanced_bipartitions(3).len(), 10);
        assert_eq!(balanced_bipartitions(4).len(), 35);
        assert_eq!(balanced_bipartitions(3)[0], Bipartition::identity(3));
    }

    #[test]
    fn bipartition_count_matches_enumeration() {
        // brute force over all k-subsets of 2k legs, halved for complements
        for k in 1..=5 {
            let all = (0u32..(1 << (2 * k))).filter(|m| m.count_ones() as usize == k).count();
            assert_eq!(balanced_bipartitions(k).len(), all / 2);
        }
    }

    #[test]
    fn complement_is_canonicalised() {
        let b = Bipartition::new(2, &[1, 3]).unwrap();
        assert_eq!(b.rows(), &[0, 2]);
        assert!(Bipartition::new(2, &[0, 0]).is_err());
        assert!(Bipartition::new(2, &[0, 4]).is_err());
    }

    #[test]
    fn identity_reshuffle() {
        let r = reshuffle(&CMatrix::identity(9), 3).unwrap();
        for row in 0..9 {
            for col in 0..9 {
                let (a, b, c, d) = (row / 3, row % 3, col / 3, col % 3);
                let expect = if a == b && c == d { 1.0 } else { 0.0 };
                assert_eq!(r[(row, col)], C64::new(expect, 0.0));
            }
        }
        let g = partial_transpose(&CMatrix::identity(9), 3).unwrap();
        assert_eq!(g, CMatrix::identity(9));
    }

    #[test]
    fn partial_transpose_of_product() {
        let a = random_matrix(3, 1);
        let b = random_matrix(3, 2);
        let g = partial_transpose(&a.kron(&b), 3).unwrap();
        assert!(g.approx_eq(&a.kron(&b.transpose()), Tolerance::DEFAULT));
    }

    #[test]
    fn shape_errors() {
        let x = CMatrix::identity(8);
        assert!(matches!(reshuffle(&x, 3), Err(Error::ShapeMismatch { .. })));
        assert!(matches!(partial_transpose(&x, 3), Err(Error::ShapeMismatch { .. })));
        let s = TensorShape::new(3, 2).unwrap();
        assert!(rearrange(&x, s, &Bipartition::identity(2)).is_err());
        assert!(TensorShape::new(1, 2).is_err());
    }

    #[test]
    fn rearrange_matches_named_operations() {
        let u = random_matrix(9, 7);
        let s = TensorShape::new(3, 2).unwrap();
        let r = rearrange(&u, s, &Bipartition::new(2, &[0, 2]).unwrap()).unwrap();
        assert_eq!(r, reshuffle(&u, 3).unwrap());
        let g = rearrange(&u, s, &Bipartition::new(2, &[0, 3]).unwrap()).unwrap();
        assert_eq!(g, partial_transpose(&u, 3).unwrap());
        let v = random_matrix(8, 3);
        let s3 = TensorShape::new(2, 3).unwrap();
        assert_eq!(rearrange(&v, s3, &Bipartition::identity(3)).unwrap(), v);
    }

    #[test]
    fn rearrange_rows_follow_chosen_legs() {
        // row legs {0, 2, 4} of a 6-leg qubit tensor: entry at tensor index
        // (i0..i5) must land in a row built from legs 0, 2, 4 only
        let s = TensorShape::new(2, 3).unwrap();
        let b = Bipartition::new(3, &[0, 2, 4]).unwrap();
        let mut u = CMatrix::zeros(8);
        // tensor index (1,0,1,0,1,1): row 0b101, col 0b011
        u[(0b101, 0b011)] = C64::new(1.0, 0.0);
        let r = rearrange(&u, s, &b).unwrap();
        let hits: Vec<(usize, usize)> = (0..8)
            .flat_map(|i| (0..8).map(move |j| (i, j)))
            .filter(|&(i, j)| r[(i, j)].norm() > 0.5)
            .collect();
        assert_eq!(hits.len(), 1);
        let (row, col) = hits[0];
        let order = b.leg_order();
        let legs = [1, 0, 1, 0, 1, 1];
        let row_digits: Vec<usize> = order[..3].iter().map(|&l| legs[l]).collect();
        let col_digits: Vec<usize> = order[3..].iter().map(|&l| legs[l]).collect();
        let pack = |v: &[usize]| v.iter().fold(0, |acc, &x| acc * 2 + x);
        assert_eq!((row, col), (pack(&row_digits), pack(&col_digits)));
        let mut row_legs = order[..3].to_vec();
        row_legs.sort();
        assert_eq!(row_legs, vec![0, 2, 4]);
    }

    proptest! {
        #[test]
        fn rearrangements_are_involutions(seed in any::<u64>()) {
            let x = random_matrix(9, seed);
            prop_assert_eq!(reshuffle(&reshuffle(&x, 3).unwrap(), 3).unwrap(), x.clone());
            prop_assert_eq!(partial_transpose(&partial_transpose(&x, 3).unwrap(), 3).unwrap(), x.clone());
            prop_assert_eq!(reshuffle(&x.conj(), 3).unwrap(), reshuffle(&x, 3).unwrap().conj());
            prop_assert_eq!(partial_transpose(&x.conj(), 3).unwrap(), partial_transpose(&x, 3).unwrap().conj());
        }

        #[test]
        fn rearrange_preserves_frobenius(seed in any::<u64>(), pick in 0usize..10) {
            let x = random_matrix(8, seed);
            let s = TensorShape::new(2, 3).unwrap();
            let b = &balanced_bipartitions(3)[pick];
            let y = rearrange(&x, s, b).unwrap();
            prop_assert!((y.frobenius_sq() - x.frobenius_sq()).abs() < 1e-9);
        }
    }
}

//! Exact dense and sparse linear algebra over `Q` and `Q(ζ)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::cyclo::{Cyclotomic, Rational};

/// The operations Gaussian elimination needs from a coefficient field.
pub trait Field: Clone + PartialEq + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
/// Columns are scanned left to right, so earlier columns become pivots first.
pub fn rref<F: Field>(rows: &mut Vec<Vec<F>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = F::one().div(&rows[r][c]);
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(pivot_row.iter()) {
                if !y.is_zero() {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Solves `Σ x_j cols[j] = rhs`, returning `None` when inconsistent.
pub fn solve_columns<F: Field>(cols: &[Vec<F>], rhs: &[F]) -> Option<Vec<F>> {
    let n = cols.len();
    let mut rows: Vec<Vec<F>> = (0..rhs.len())
        .map(|i| {
            let mut row: Vec<F> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(rhs[i].clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x = vec![F::zero(); n];
    for (row, &c) in rows.iter().zip(pivots.iter()) {
        x[c] = row[n].clone();
    }
    Some(x)
}

/// Basis of the null space `{x : A x = 0}`.
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![F::zero(); ncols];
            v[f] = F::one();
            for (row, &p) in m.iter().zip(pivots.iter()) {
                v[p] = row[f].neg();
            }
            v
        })
        .collect()
}

pub fn determinant<F: Field>(m: &[Vec<F>]) -> F {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = F::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return F::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.neg();
        }
        det = det.mul(&a[c][c]);
        let inv = F::one().div(&a[c][c]);
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul(&inv);
            for j in c..n {
                let t = f.mul(&a[c][j]);
                a[i][j] = a[i][j].sub(&t);
            }
        }
    }
    det
}

/// A sparse vector: column index to nonzero entry.
pub type SparseVec<F> = BTreeMap<usize, F>;

/// Incremental exact rank of a family of sparse vectors.
///
/// Keeps an echelon basis keyed by pivot column; each inserted vector is
/// reduced against it, so rank queries cost nothing after insertion.
#[derive(Clone, Debug)]
pub struct SparseEchelon<F: Field> {
    rows: HashMap<usize, SparseVec<F>>,
}

impl<F: Field> Default for SparseEchelon<F> {
    fn default() -> Self {
        SparseEchelon { rows: HashMap::new() }
    }
}

impl<F: Field> SparseEchelon<F> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` and adds it to the basis; returns whether the rank grew.
    pub fn insert(&mut self, mut v: SparseVec<F>) -> bool {
        v.retain(|_, x| !x.is_zero());
        while let Some((&lead, lead_val)) = v.iter().next() {
            let Some(row) = self.rows.get(&lead) else {
                let inv = F::one().div(lead_val);
                for x in v.values_mut() {
                    *x = x.mul(&inv);
                }
                self.rows.insert(lead, v);
                return true;
            };
            let f = lead_val.clone();
            for (&c, y) in row.iter() {
                let t = f.mul(y);
                let e = v.entry(c).or_insert_with(F::zero);
                *e = e.sub(&t);
                if e.is_zero() {
                    v.remove(&c);
                }
            }
        }
        false
    }
}

/// Rank of a family of sparse vectors, splitting it into blocks that share no
/// columns first (connected components of the row/column incidence graph).
pub fn sparse_rank<F: Field>(vectors: &[SparseVec<F>]) -> usize {
    let mut parent: HashMap<usize, usize> = HashMap::new();
    fn find(p: &mut HashMap<usize, usize>, x: usize) -> usize {
        let mut r = x;
        while let Some(&q) = p.get(&r) {
            if q == r {
                break;
            }
            r = q;
        }
        let mut y = x;
        while y != r {
            let next = p[&y];
            p.insert(y, r);
            y = next;
        }
        r
    }
    for v in vectors {
        let mut cols = v.iter().filter(|(_, x)| !x.is_zero()).map(|(c, _)| *c);
        if let Some(first) = cols.next() {
            parent.entry(first).or_insert(first);
            for c in cols {
                parent.entry(c).or_insert(c);
                let (a, b) = (find(&mut parent, first), find(&mut parent, c));
                if a != b {
                    parent.insert(a, b);
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<&SparseVec<F>>> = BTreeMap::new();
    for v in vectors {
        if let Some((&c, _)) = v.iter().find(|(_, x)| !x.is_zero()) {
            let root = find(&mut parent, c);
            blocks.entry(root).or_default().push(v);
        }
    }
    let ranks = crate::par::map(blocks.into_values().collect::<Vec<_>>(), |block| {
        let mut ech = SparseEchelon::new();
        for v in block {
            ech.insert(v.clone());
        }
        ech.rank()
    });
    ranks.into_iter().sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::rat;

    #[test]
    fn rank_and_kernel() {
        let m = vec![
            vec![rat(1, 1), rat(2, 1), rat(3, 1)],
            vec![rat(2, 1), rat(4, 1), rat(6, 1)],
            vec![rat(0, 1), rat(1, 1), rat(1, 1)],
        ];
        assert_eq!(rank(&m), 2);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        for row in &m {
            let s: Rational = row.iter().zip(k[0].iter()).map(|(a, b)| a * b).sum();
            assert!(Zero::is_zero(&s));
        }
        assert!(Zero::is_zero(&determinant(&m)));
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let dense = vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(2, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(2, 1), rat(0, 1), rat(0, 1), rat(4, 1)],
            vec![rat(0, 1), rat(3, 1), rat(1, 1), rat(0, 1)],
        ];
        let sparse: Vec<SparseVec<Rational>> = dense
            .iter()
            .map(|r| r.iter().enumerate().filter(|(_, x)| !Zero::is_zero(*x)).map(|(i, x)| (i, x.clone())).collect())
            .collect();
        assert_eq!(sparse_rank(&sparse), rank(&dense));
        assert_eq!(rank(&dense), 3);
    }
}

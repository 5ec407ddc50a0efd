//! Incremental Gaussian elimination over `Q` on sparse vectors.

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::Q;

pub type SparseVec<K> = BTreeMap<K, Q>;

pub fn axpy<K: Ord + Clone>(y: &mut SparseVec<K>, a: &Q, x: &SparseVec<K>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let slot = y.entry(k.clone()).or_insert_with(Q::zero);
        *slot += a * v;
        if slot.is_zero() {
            y.remove(k);
        }
    }
}

struct Row<K> {
    pivot: K,
    vec: SparseVec<K>,
    /// The row as a combination of inserted vectors, by insertion id.
    combo: SparseVec<usize>,
}

/// Row echelon form that remembers how each row arose from the inserted
/// vectors, so it can answer membership, coordinates and kernel queries.
pub struct Echelon<K> {
    rows: Vec<Row<K>>,
    inserted: usize,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon { rows: Vec::new(), inserted: 0 }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Returns `(residue, combo)` with `v = residue + Σ combo[i] * inserted[i]`.
    pub fn reduce(&self, v: &SparseVec<K>) -> (SparseVec<K>, SparseVec<usize>) {
        let mut r = v.clone();
        let mut combo = SparseVec::new();
        for row in &self.rows {
            if let Some(c) = r.get(&row.pivot).cloned() {
                // row pivots are normalised to 1
                axpy(&mut r, &-c.clone(), &row.vec);
                axpy(&mut combo, &c, &row.combo);
            }
        }
        (r, combo)
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Inserts `v`. On dependence returns `Err(combo)` expressing `v` in terms
    /// of earlier insertions; otherwise `Ok(id)`.
    pub fn insert(&mut self, v: &SparseVec<K>) -> Result<usize, SparseVec<usize>> {
        let id = self.inserted;
        self.inserted += 1;
        let (mut r, combo) = self.reduce(v);
        if r.is_empty() {
            return Err(combo);
        }
        let mut own = SparseVec::new();
        own.insert(id, Q::one());
        axpy(&mut own, &-Q::one(), &combo);
        let (pivot, lead) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())).unwrap();
        let inv = Q::one() / lead;
        for c in r.values_mut() {
            *c *= &inv;
        }
        for c in own.values_mut() {
            *c *= &inv;
        }
        // keep earlier rows reduced against the new pivot so `reduce` works in one pass
        for row in &mut self.rows {
            if let Some(c) = row.vec.get(&pivot).cloned() {
                axpy(&mut row.vec, &-c.clone(), &r);
                axpy(&mut row.combo, &-c, &own);
            }
        }
        self.rows.push(Row { pivot, vec: std::mem::take(&mut r), combo: own });
        Ok(id)
    }
}

/// Basis of the kernel of the linear map sending input `i` to `images[i]`.
/// Kernel vectors are expressed in input indices.
pub fn kernel<K: Ord + Clone>(images: &[SparseVec<K>]) -> Vec<SparseVec<usize>> {
    let mut ech = Echelon::new();
    let mut out = Vec::new();
    for (i, img) in images.iter().enumerate() {
        if let Err(combo) = ech.insert(img) {
            let mut k = SparseVec::new();
            k.insert(i, Q::one());
            axpy(&mut k, &-Q::one(), &combo);
            out.push(k);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn v(pairs: &[(u32, i64)]) -> SparseVec<u32> {
        pairs.iter().filter(|p| p.1 != 0).map(|&(k, c)| (k, q(c))).collect()
    }

    #[test]
    fn dependence_reports_combination() {
        let mut e = Echelon::new();
        assert_eq!(e.insert(&v(&[(0, 1), (1, 1)])), Ok(0));
        assert_eq!(e.insert(&v(&[(1, 2)])), Ok(1));
        let combo = e.insert(&v(&[(0, 2), (1, 5)])).unwrap_err();
        // (2,5) = 2*(1,1) + 3/2*(0,2)
        assert_eq!(combo.get(&0), Some(&q(2)));
        assert_eq!(combo.get(&1), Some(&crate::scalar::qr(3, 2)));
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let imgs = vec![v(&[(0, 1)]), v(&[(0, 2)]), v(&[(0, -1)])];
        let k = kernel(&imgs);
        assert_eq!(k.len(), 2);
        for kv in &k {
            let mut s = SparseVec::new();
            for (i, c) in kv {
                axpy(&mut s, c, &imgs[*i]);
            }
            assert!(s.is_empty());
        }
    }
}

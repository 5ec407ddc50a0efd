use num::One;

use super::poly::DPoly;
use super::presentation::{GenKind, LcaPresentation};
use super::vector::{BasisIndex, ConformalVector};
use crate::scalar::{factorial, Q};

type Row = Vec<DPoly>;

/// A `Q[∂]`-submodule of `R`, stored as the Hermite normal form of its
/// preimage in the free module `Q[∂]^G` (torsion relations included).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Submodule {
    /// Echelon rows with monic pivots, entries above each pivot reduced.
    rows: Vec<(usize, Row)>,
    rank: usize,
    kinds: Vec<GenKind>,
}

fn to_row(v: &ConformalVector, rank: usize) -> Row {
    let mut row = vec![DPoly::zero(); rank];
    for (idx, c) in v.iter() {
        row[idx.gen as usize].add_monomial(&(c / factorial(idx.depth as u64)), idx.depth as usize);
    }
    row
}

fn sub_row(a: &mut Row, q: &DPoly, b: &Row) {
    for (x, y) in a.iter_mut().zip(b) {
        x.sub_mul(q, y);
    }
}

impl Submodule {
    /// The submodule generated by `gens`.
    pub fn generated(p: &LcaPresentation, gens: &[ConformalVector]) -> Submodule {
        let rank = p.rank();
        let mut rows: Vec<Row> = gens.iter().map(|v| to_row(v, rank)).collect();
        for (g, spec) in p.generators().iter().enumerate() {
            if let GenKind::Torsion(m) = spec.kind {
                let mut r = vec![DPoly::zero(); rank];
                r[g] = DPoly::monomial(Q::one(), m as usize);
                rows.push(r);
            }
        }
        let kinds = p.generators().iter().map(|g| g.kind).collect();
        Submodule { rows: hermite(rows, rank), rank, kinds }
    }

    pub fn whole(p: &LcaPresentation) -> Submodule {
        let gens: Vec<_> = (0..p.rank() as u32)
            .map(|g| ConformalVector::unit(BasisIndex::new(g, 0)))
            .collect();
        Self::generated(p, &gens)
    }

    fn is_live(&self, idx: BasisIndex) -> bool {
        match self.kinds[idx.gen as usize] {
            GenKind::Free => true,
            GenKind::Torsion(m) => idx.depth < m,
        }
    }

    fn vector_of_row(&self, row: &Row) -> ConformalVector {
        let mut v = ConformalVector::zero();
        for (g, poly) in row.iter().enumerate() {
            for (d, c) in poly.coeffs().iter().enumerate() {
                let idx = BasisIndex::new(g as u32, d as u32);
                if self.is_live(idx) {
                    v.add_term(idx, c * factorial(d as u64));
                }
            }
        }
        v
    }

    /// Module generators as vectors of `R`; empty for the zero submodule.
    pub fn generators(&self) -> Vec<ConformalVector> {
        self.rows.iter().map(|(_, r)| self.vector_of_row(r)).filter(|v| !v.is_zero()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.generators().is_empty()
    }

    /// Canonical remainder of `v` modulo the submodule. `Q`-linear in `v`.
    pub fn normal_form(&self, v: &ConformalVector) -> ConformalVector {
        let mut row = to_row(v, self.rank);
        for (piv, r) in &self.rows {
            if row[*piv].is_zero() {
                continue;
            }
            let (q, _) = row[*piv].divrem(&r[*piv]);
            sub_row(&mut row, &q, r);
        }
        self.vector_of_row(&row)
    }

    pub fn contains(&self, v: &ConformalVector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_module(&self, other: &Submodule) -> bool {
        other.generators().iter().all(|g| self.contains(g))
    }
}

fn hermite(mut rows: Vec<Row>, rank: usize) -> Vec<(usize, Row)> {
    let mut done: Vec<(usize, Row)> = Vec::new();
    for col in 0..rank {
        loop {
            rows.retain(|r| r.iter().any(|p| !p.is_zero()));
            let mut live: Vec<usize> = (0..rows.len()).filter(|&i| !rows[i][col].is_zero()).collect();
            if live.len() <= 1 {
                break;
            }
            live.sort_by_key(|&i| rows[i][col].degree());
            let best = live[0];
            let pivot_row = rows[best].clone();
            for &i in &live[1..] {
                let (q, _) = rows[i][col].divrem(&pivot_row[col]);
                sub_row(&mut rows[i], &q, &pivot_row);
            }
        }
        if let Some(i) = (0..rows.len()).find(|&i| !rows[i][col].is_zero()) {
            let mut r = rows.remove(i);
            let inv = Q::one() / r[col].lead().unwrap();
            for p in r.iter_mut() {
                p.scale(&inv);
            }
            done.push((col, r));
        }
    }
    // reduce entries above each pivot
    for k in 0..done.len() {
        let (col, pivot_row) = done[k].clone();
        for (_, r) in done.iter_mut().take(k) {
            if r[col].is_zero() {
                continue;
            }
            let (q, _) = r[col].divrem(&pivot_row[col]);
            if !q.is_zero() {
                sub_row(r, &q, &pivot_row);
            }
        }
    }
    done
}

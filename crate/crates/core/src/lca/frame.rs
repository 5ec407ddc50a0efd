use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num::Zero;

use super::presentation::LcaPresentation;
use super::series::Filtration;
use super::submodule::Submodule;
use super::vector::{BasisIndex, ConformalVector};
use crate::error::Result;
use crate::linalg::{Echelon, SparseVec};
use crate::scalar::Q;

/// A basis vector of `R` in some frame, packed so that the derived order is
/// lexicographic in `(theta, major, minor)`.
///
/// Raw and graded frames use `major = generator`, `minor = depth`; the
/// general adapted frame uses `major = stratum`, `minor = issue order`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(u64);

impl Letter {
    pub fn new(theta: u32, major: u32, minor: u32) -> Letter {
        assert!(theta < 1 << 8 && major < 1 << 24);
        Letter(((theta as u64) << 56) | ((major as u64) << 32) | minor as u64)
    }

    pub fn theta(self) -> u32 {
        (self.0 >> 56) as u32
    }

    pub fn major(self) -> u32 {
        ((self.0 >> 32) & 0xff_ffff) as u32
    }

    pub fn minor(self) -> u32 {
        self.0 as u32
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L({},{},{})", self.theta(), self.major(), self.minor())
    }
}

enum FrameKind {
    Raw,
    Graded,
    General(Box<General>),
}

struct General {
    filtration: Filtration,
    state: RwLock<GeneralState>,
}

#[derive(Default)]
struct GeneralState {
    /// Strata `0..built` have been issued.
    built: u32,
    letters: Vec<Letter>,
    vectors: HashMap<Letter, ConformalVector>,
    inverse: HashMap<BasisIndex, Vec<(Letter, Q)>>,
}

/// A choice of ordered basis of `R` indexing PBW letters.
pub struct Frame {
    pres: Arc<LcaPresentation>,
    theta: Vec<u32>,
    kind: FrameKind,
}

impl Frame {
    /// The divided-power basis `∂^{(d)} g` ordered by `(generator, depth)`.
    pub fn raw(pres: Arc<LcaPresentation>) -> Frame {
        let theta = vec![0; pres.rank()];
        Frame { pres, theta, kind: FrameKind::Raw }
    }

    /// A basis adapted to the lower central series; letters are ordered by
    /// `Θ` first. Fails for algebras that are not nilpotent.
    pub fn adapted(pres: Arc<LcaPresentation>) -> Result<Frame> {
        let filtration = Filtration::new(&pres)?;
        let theta: Vec<u32> = (0..pres.rank() as u32)
            .map(|g| filtration.theta(&ConformalVector::unit(BasisIndex::new(g, 0))).unwrap())
            .collect();
        let graded = (1..=filtration.degree()).all(|j| {
            let gens: Vec<ConformalVector> = (0..pres.rank() as u32)
                .filter(|&g| theta[g as usize] >= j as u32)
                .map(|g| ConformalVector::unit(BasisIndex::new(g, 0)))
                .collect();
            &Submodule::generated(&pres, &gens) == filtration.term(j)
        });
        let kind = if graded {
            FrameKind::Graded
        } else {
            FrameKind::General(Box::new(General { filtration, state: RwLock::new(GeneralState::default()) }))
        };
        Ok(Frame { pres, theta, kind })
    }

    /// Adapted frame when nilpotent, raw otherwise.
    pub fn auto(pres: Arc<LcaPresentation>) -> Frame {
        match Frame::adapted(pres.clone()) {
            Ok(f) => f,
            Err(_) => Frame::raw(pres),
        }
    }

    pub fn presentation(&self) -> &Arc<LcaPresentation> {
        &self.pres
    }

    pub fn kind_name(&self) -> &'static str {
        match self.kind {
            FrameKind::Raw => "raw",
            FrameKind::Graded => "graded",
            FrameKind::General(_) => "general",
        }
    }

    pub fn is_adapted(&self) -> bool {
        !matches!(self.kind, FrameKind::Raw)
    }

    /// Letter of a live basis index; only for raw and graded frames.
    pub fn letter_of(&self, idx: BasisIndex) -> Option<Letter> {
        match self.kind {
            FrameKind::Raw => Some(Letter::new(0, idx.gen, idx.depth)),
            FrameKind::Graded => Some(Letter::new(self.theta[idx.gen as usize], idx.gen, idx.depth)),
            FrameKind::General(_) => None,
        }
    }

    /// Maximal depth among the components of the letter's vector.
    pub fn stratum(&self, l: Letter) -> u32 {
        match self.kind {
            FrameKind::General(_) => l.major(),
            _ => l.minor(),
        }
    }

    pub fn theta(&self, l: Letter) -> Option<u32> {
        match self.kind {
            FrameKind::Raw => None,
            _ => Some(l.theta()),
        }
    }

    pub fn vector(&self, l: Letter) -> ConformalVector {
        match &self.kind {
            FrameKind::General(g) => {
                self.extend(g, l.major());
                g.state.read().unwrap().vectors[&l].clone()
            }
            _ => ConformalVector::unit(BasisIndex::new(l.major(), l.minor())),
        }
    }

    /// Coordinates of `v` in the letter basis.
    pub fn coords(&self, v: &ConformalVector) -> SparseVec<Letter> {
        let mut out = SparseVec::new();
        match &self.kind {
            FrameKind::General(g) => {
                if let Some(d) = v.max_depth() {
                    self.extend(g, d);
                }
                let st = g.state.read().unwrap();
                for (idx, c) in v.iter() {
                    if !self.pres.is_live(*idx) {
                        continue;
                    }
                    for (l, x) in &st.inverse[idx] {
                        crate::linalg::axpy(&mut out, c, &SparseVec::from([(*l, x.clone())]));
                    }
                }
            }
            _ => {
                for (idx, c) in v.iter() {
                    if self.pres.is_live(*idx) {
                        out.insert(self.letter_of(*idx).unwrap(), c.clone());
                    }
                }
            }
        }
        out
    }

    /// All letters of stratum at most `cap`, in order.
    pub fn letters_up_to(&self, cap: u32) -> Vec<Letter> {
        let mut out: Vec<Letter> = match &self.kind {
            FrameKind::General(g) => {
                self.extend(g, cap);
                let st = g.state.read().unwrap();
                st.letters.iter().copied().filter(|l| l.major() <= cap).collect()
            }
            _ => self.pres.basis_up_to(cap).into_iter().map(|i| self.letter_of(i).unwrap()).collect(),
        };
        out.sort();
        out
    }

    /// `∂^{(j)}` of a letter, in letter coordinates.
    pub fn partial(&self, l: Letter, j: u32) -> SparseVec<Letter> {
        match self.kind {
            FrameKind::General(_) => self.coords(&self.pres.apply_partial(&self.vector(l), j)),
            _ => {
                let v = self.pres.apply_partial(&ConformalVector::unit(BasisIndex::new(l.major(), l.minor())), j);
                self.coords(&v)
            }
        }
    }

    pub fn letter_name(&self, l: Letter) -> String {
        match self.kind {
            FrameKind::General(_) => format!("e{}.{}.{}", l.theta(), l.major(), l.minor()),
            _ => format!("{}[{}]", self.pres.generators()[l.major() as usize].name, l.minor()),
        }
    }

    /// Inverse of [`Frame::letter_name`]; a bare generator name means depth 0.
    pub fn parse_letter(&self, s: &str) -> Option<Letter> {
        let s = s.trim();
        match &self.kind {
            FrameKind::General(g) => {
                let rest = s.strip_prefix('e')?;
                let mut it = rest.split('.').map(|x| x.parse::<u32>());
                let (t, m, n) = (it.next()?.ok()?, it.next()?.ok()?, it.next()?.ok()?);
                let l = Letter::new(t, m, n);
                self.extend(g, m);
                g.state.read().unwrap().vectors.contains_key(&l).then_some(l)
            }
            _ => {
                let (name, depth) = match s.split_once('[') {
                    Some((n, d)) => (n, d.strip_suffix(']')?.trim().parse().ok()?),
                    None => (s, 0),
                };
                let idx = BasisIndex::new(self.pres.gen_index(name.trim())?, depth);
                self.pres.is_live(idx).then(|| self.letter_of(idx).unwrap())
            }
        }
    }

    fn extend(&self, g: &General, cap: u32) {
        if g.state.read().unwrap().built > cap {
            return;
        }
        let mut st = g.state.write().unwrap();
        while st.built <= cap {
            let d = st.built;
            self.issue_stratum(&g.filtration, &mut st, d);
            st.built += 1;
        }
    }

    fn issue_stratum(&self, f: &Filtration, st: &mut GeneralState, d: u32) {
        let p = &self.pres;
        let slice = p.basis_up_to(d);
        let as_sparse = |v: &ConformalVector| -> SparseVec<BasisIndex> {
            v.iter().map(|(i, c)| (*i, c.clone())).collect()
        };
        let mut span: Echelon<BasisIndex> = Echelon::new();
        let mut seq = 0;
        let n = f.degree() as u32;
        for j in (1..=n).rev() {
            for l in st.letters.iter().filter(|l| l.theta() == j) {
                let _ = span.insert(&as_sparse(&st.vectors[l]));
            }
            let m = f.term(j as usize);
            let images: Vec<SparseVec<BasisIndex>> = slice
                .iter()
                .map(|i| as_sparse(&m.normal_form(&ConformalVector::unit(*i))))
                .collect();
            for k in crate::linalg::kernel(&images) {
                let v: ConformalVector = k.iter().map(|(i, c)| (slice[*i], c.clone())).collect();
                if span.insert(&as_sparse(&v)).is_ok() {
                    let l = Letter::new(j, d, seq);
                    seq += 1;
                    st.letters.push(l);
                    st.vectors.insert(l, v);
                }
            }
        }
        // coordinates of the new basis indices
        let mut all: Echelon<BasisIndex> = Echelon::new();
        let order: Vec<Letter> = st.letters.clone();
        for l in &order {
            all.insert(&as_sparse(&st.vectors[l])).expect("letters are independent");
        }
        for idx in slice.iter().filter(|i| i.depth == d) {
            let (res, combo) = all.reduce(&SparseVec::from([(*idx, Q::from_integer(1.into()))]));
            debug_assert!(res.is_empty());
            let coords = combo.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (order[i], c)).collect();
            st.inverse.insert(*idx, coords);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden;

    #[test]
    fn packing_orders_lexicographically() {
        let a = Letter::new(1, 5, 7);
        let b = Letter::new(1, 6, 0);
        let c = Letter::new(2, 0, 0);
        assert!(a < b && b < c);
        assert_eq!((c.theta(), a.major(), a.minor()), (2, 5, 7));
    }

    #[test]
    fn graded_fast_path() {
        for (p, _) in golden::nilpotent() {
            let f = Frame::adapted(Arc::new(p)).unwrap();
            assert_eq!(f.kind_name(), "graded");
        }
        let h = Frame::adapted(Arc::new(golden::heisenberg())).unwrap();
        let ls = h.letters_up_to(1);
        // a[0], a[1] have Θ=1, k[0] has Θ=2 and sorts last
        assert_eq!(ls.len(), 3);
        assert_eq!(h.letter_name(ls[2]), "k[0]");
    }

    fn check_general(p: LcaPresentation) {
        let p = Arc::new(p);
        let f = Frame::adapted(p.clone()).unwrap();
        assert_eq!(f.kind_name(), "general");
        let filt = Filtration::new(&p).unwrap();
        for cap in 0..4 {
            let ls = f.letters_up_to(cap);
            assert_eq!(ls.len(), p.basis_up_to(cap).len());
            for l in &ls {
                let v = f.vector(*l);
                assert_eq!(filt.theta(&v), Some(l.theta()));
                assert!(v.max_depth().unwrap() <= cap);
                let back = f.coords(&v);
                assert_eq!(back.len(), 1);
                assert_eq!(f.parse_letter(&f.letter_name(*l)), Some(*l));
            }
            // the letters labelled >= j span R^j in the slice
            let slice = p.basis_up_to(cap);
            for j in 1..=filt.degree() as u32 {
                let images: Vec<SparseVec<BasisIndex>> = slice
                    .iter()
                    .map(|i| {
                        let nf = filt.term(j as usize).normal_form(&ConformalVector::unit(*i));
                        nf.iter().map(|(k, c)| (*k, c.clone())).collect()
                    })
                    .collect();
                let dim = crate::linalg::kernel(&images).len();
                assert_eq!(ls.iter().filter(|l| l.theta() >= j).count(), dim);
            }
        }
    }

    #[test]
    fn general_path() {
        check_general(golden::split_center());
        check_general(golden::mixed_depth());
    }

    #[test]
    fn issued_letters_are_stable() {
        let f = Frame::adapted(Arc::new(golden::mixed_depth())).unwrap();
        let first = f.letters_up_to(1);
        let later = f.letters_up_to(3);
        for l in &first {
            assert!(later.contains(l));
        }
    }
}

//! Ground-set management, the rank-oracle abstraction, and derived matroid
//! queries: closure, connectivity, minors, duality, direct sums,
//! simplification, fundamental circuits.
//!
//! A [`Matroid`] is an immutable ground set plus a rank oracle. Backends are
//! either typed (uniform, linear over GF(q), graphic, framed bicircular,
//! explicit basis table) or structural wrappers that compose lazily (minor,
//! dual, direct sum, principal extension, element remapping). Rank calls are
//! memoized per matroid, keyed by subset bitmask.

pub mod certificate;
pub mod iso;

use crate::error::{MatroidError, Result};
use crate::gf::GfField;
use crate::graph::{max_bipartite_matching, Graph, UnionFind};
use crate::ground::GroundSet;
use crate::mask::Mask;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

pub use certificate::MinorCertificate;

/// Exhaustive rank-function comparisons and tables are limited to this many
/// elements; 2^20 table entries is the largest we materialize.
pub const TABLE_CAP: usize = 20;

#[derive(Clone, Debug)]
pub enum BicircItem {
    Edge(usize, usize),
    Vertex(usize),
}

#[derive(Debug)]
pub enum Backend {
    Uniform { rank: usize },
    Linear { field: Arc<GfField>, cols: Vec<Vec<u32>> },
    Graphic { n_vertices: usize, endpoints: Vec<(usize, usize)>, graph: Graph },
    BicircularPlus { n_vertices: usize, items: Vec<BicircItem>, graph: Graph },
    Bases { bases: Vec<u64> },
    /// Ground set is parent's minus contract minus delete; `keep[i]` is the
    /// parent index of element `i`.
    Minor { parent: Matroid, keep: Vec<usize>, contract: Mask, contract_rank: usize },
    Dual { parent: Matroid },
    DirectSum { left: Matroid, right: Matroid },
    /// Parent plus one element placed freely on the closure of `flat`;
    /// the new element is the last index.
    Extension { parent: Matroid, flat: Mask },
    /// Each element maps to a parent element (carrying its rank behaviour)
    /// or to nothing (a loop). Used for relabelings and shifts.
    Mapped { parent: Matroid, map: Vec<Option<usize>> },
}

struct Inner {
    ground: GroundSet,
    backend: Backend,
    cache: Mutex<HashMap<u64, u8>>,
    full_rank: OnceLock<u8>,
}

#[derive(Clone)]
pub struct Matroid {
    inner: Arc<Inner>,
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Matroid(n={}, r={}, backend={})",
            self.n_elements(),
            self.rank_full(),
            self.backend_name()
        )
    }
}

impl Matroid {
    pub fn from_backend(ground: GroundSet, backend: Backend) -> Matroid {
        Matroid {
            inner: Arc::new(Inner {
                ground,
                backend,
                cache: Mutex::new(HashMap::new()),
                full_rank: OnceLock::new(),
            }),
        }
    }

    pub fn ground(&self) -> &GroundSet {
        &self.inner.ground
    }

    pub fn backend(&self) -> &Backend {
        &self.inner.backend
    }

    pub fn backend_name(&self) -> &'static str {
        match &self.inner.backend {
            Backend::Uniform { .. } => "uniform",
            Backend::Linear { .. } => "linear",
            Backend::Graphic { .. } => "graphic",
            Backend::BicircularPlus { .. } => "bicircular_plus",
            Backend::Bases { .. } => "bases",
            Backend::Minor { .. } => "minor",
            Backend::Dual { .. } => "dual",
            Backend::DirectSum { .. } => "direct_sum",
            Backend::Extension { .. } => "extension",
            Backend::Mapped { .. } => "mapped",
        }
    }

    pub fn n_elements(&self) -> usize {
        self.inner.ground.len()
    }

    pub fn full_mask(&self) -> Mask {
        self.inner.ground.full_mask()
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        self.inner.ground.mask_of(labels)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<String> {
        self.inner.ground.labels_of(mask)
    }

    /// r(M): rank of the full ground set.
    pub fn rank_full(&self) -> usize {
        *self.inner.full_rank.get_or_init(|| self.rank_mask(self.full_mask()) as u8) as usize
    }

    /// Rank of a subset given as a mask.
    pub fn rank_mask(&self, mask: Mask) -> usize {
        debug_assert!(mask.is_subset_of(self.full_mask()));
        if mask.is_empty() {
            return 0;
        }
        if let Backend::Uniform { rank } = &self.inner.backend {
            return mask.len().min(*rank);
        }
        if let Some(&r) = self.inner.cache.lock().unwrap().get(&mask.0) {
            return r as usize;
        }
        let r = self.rank_uncached(mask);
        self.inner.cache.lock().unwrap().insert(mask.0, r as u8);
        r
    }

    fn rank_uncached(&self, mask: Mask) -> usize {
        match &self.inner.backend {
            Backend::Uniform { rank } => mask.len().min(*rank),
            Backend::Linear { field, cols } => {
                let selected: Vec<&[u32]> =
                    mask.iter().map(|i| cols[i].as_slice()).collect();
                field.rank_of_columns(&selected)
            }
            Backend::Graphic { n_vertices, endpoints, .. } => {
                let mut uf = UnionFind::new(*n_vertices);
                let mut rank = 0;
                for i in mask.iter() {
                    let (u, v) = endpoints[i];
                    if uf.union(u, v) {
                        rank += 1;
                    }
                }
                rank
            }
            Backend::BicircularPlus { n_vertices, items, .. } => {
                let adj: Vec<Vec<usize>> = mask
                    .iter()
                    .map(|i| match items[i] {
                        BicircItem::Edge(u, v) => {
                            if u == v {
                                vec![u]
                            } else {
                                vec![u, v]
                            }
                        }
                        BicircItem::Vertex(v) => vec![v],
                    })
                    .collect();
                max_bipartite_matching(&adj, *n_vertices)
            }
            Backend::Bases { bases } => bases
                .iter()
                .map(|b| (b & mask.0).count_ones() as usize)
                .max()
                .unwrap_or(0),
            Backend::Minor { parent, keep, contract, contract_rank } => {
                let mut pm = *contract;
                for i in mask.iter() {
                    pm = pm.insert(keep[i]);
                }
                parent.rank_mask(pm) - contract_rank
            }
            Backend::Dual { parent } => {
                let e = parent.full_mask();
                mask.len() + parent.rank_mask(e.minus(mask)) - parent.rank_full()
            }
            Backend::DirectSum { left, right } => {
                let nl = left.n_elements();
                let lm = Mask(mask.0 & Mask::full(nl).0);
                let rm = Mask(mask.0 >> nl);
                left.rank_mask(lm) + right.rank_mask(rm)
            }
            Backend::Extension { parent, flat } => {
                let new_idx = parent.n_elements();
                if mask.contains(new_idx) {
                    let rest = mask.remove(new_idx);
                    let a = parent.rank_mask(rest) + 1;
                    let b = parent.rank_mask(rest.union(*flat));
                    a.min(b)
                } else {
                    parent.rank_mask(mask)
                }
            }
            Backend::Mapped { parent, map } => {
                let mut pm = Mask::EMPTY;
                for i in mask.iter() {
                    if let Some(p) = map[i] {
                        pm = pm.insert(p);
                    }
                }
                parent.rank_mask(pm)
            }
        }
    }

    /// Rank of a subset given as labels.
    pub fn rank<S: AsRef<str>>(&self, labels: &[S]) -> Result<usize> {
        Ok(self.rank_mask(self.mask_of(labels)?))
    }

    pub fn is_independent_mask(&self, mask: Mask) -> bool {
        self.rank_mask(mask) == mask.len()
    }

    pub fn is_basis_mask(&self, mask: Mask) -> bool {
        mask.len() == self.rank_full() && self.is_independent_mask(mask)
    }

    /// Minimally dependent set?
    pub fn is_circuit_mask(&self, mask: Mask) -> bool {
        if mask.is_empty() || self.is_independent_mask(mask) {
            return false;
        }
        mask.iter().all(|i| self.is_independent_mask(mask.remove(i)))
    }

    /// cl(A) = {e : r(A ∪ {e}) = r(A)}.
    pub fn closure_mask(&self, mask: Mask) -> Mask {
        let r = self.rank_mask(mask);
        let mut cl = mask;
        for e in self.full_mask().minus(mask).iter() {
            if self.rank_mask(mask.insert(e)) == r {
                cl = cl.insert(e);
            }
        }
        cl
    }

    pub fn closure<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<String>> {
        Ok(self.labels_of(self.closure_mask(self.mask_of(labels)?)))
    }

    /// Local connectivity ⊓(A,B) = r(A) + r(B) − r(A ∪ B).
    pub fn local_connectivity_mask(&self, a: Mask, b: Mask) -> usize {
        self.rank_mask(a) + self.rank_mask(b) - self.rank_mask(a.union(b))
    }

    /// λ(A) = r(A) + r(E−A) − r(M).
    pub fn lambda_mask(&self, a: Mask) -> usize {
        let e = self.full_mask();
        self.rank_mask(a) + self.rank_mask(e.minus(a)) - self.rank_full()
    }

    /// (⊓(A,B), λ(A) when B = E−A).
    pub fn connectivity<S: AsRef<str>>(
        &self,
        a: &[S],
        b: &[S],
    ) -> Result<(usize, Option<usize>)> {
        let am = self.mask_of(a)?;
        let bm = self.mask_of(b)?;
        let local = self.local_connectivity_mask(am, bm);
        let lambda =
            (bm == self.full_mask().minus(am)).then(|| self.lambda_mask(am));
        Ok((local, lambda))
    }

    /// M / C \ D as a lazy rank wrapper.
    pub fn minor_mask(&self, contract: Mask, delete: Mask) -> Result<Matroid> {
        if !contract.is_disjoint(delete) {
            return Err(MatroidError::OverlappingSets);
        }
        let full = self.full_mask();
        if !contract.is_subset_of(full) || !delete.is_subset_of(full) {
            return Err(MatroidError::UnknownElement("out of range".into()));
        }
        let keep_mask = full.minus(contract).minus(delete);
        let keep: Vec<usize> = keep_mask.iter().collect();
        let labels: Vec<String> =
            keep.iter().map(|&i| self.inner.ground.label(i).to_string()).collect();
        let ground = GroundSet::new(labels)?;
        let contract_rank = self.rank_mask(contract);
        Ok(Matroid::from_backend(
            ground,
            Backend::Minor { parent: self.clone(), keep, contract, contract_rank },
        ))
    }

    pub fn minor<S: AsRef<str>>(&self, contract: &[S], delete: &[S]) -> Result<Matroid> {
        self.minor_mask(self.mask_of(contract)?, self.mask_of(delete)?)
    }

    pub fn contract_mask(&self, c: Mask) -> Result<Matroid> {
        self.minor_mask(c, Mask::EMPTY)
    }

    pub fn delete_mask(&self, d: Mask) -> Result<Matroid> {
        self.minor_mask(Mask::EMPTY, d)
    }

    /// Restriction M | A = M \ (E − A).
    pub fn restrict_mask(&self, a: Mask) -> Result<Matroid> {
        self.delete_mask(self.full_mask().minus(a))
    }

    pub fn dual(&self) -> Matroid {
        // dual of dual unwraps to the original
        if let Backend::Dual { parent } = &self.inner.backend {
            return parent.clone();
        }
        Matroid::from_backend(
            self.inner.ground.clone(),
            Backend::Dual { parent: self.clone() },
        )
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        for l in other.inner.ground.labels() {
            if self.inner.ground.contains(l) {
                return Err(MatroidError::LabelCollision(l.clone()));
            }
        }
        let labels: Vec<String> = self
            .inner
            .ground
            .labels()
            .iter()
            .chain(other.inner.ground.labels())
            .cloned()
            .collect();
        let ground = GroundSet::new(labels)?;
        Ok(Matroid::from_backend(
            ground,
            Backend::DirectSum { left: self.clone(), right: other.clone() },
        ))
    }

    /// New element placed freely on cl(flat); rank is unchanged. With an
    /// empty flat the new element is a loop.
    pub fn principal_extension_mask(&self, flat: Mask, label: &str) -> Result<Matroid> {
        if self.inner.ground.contains(label) {
            return Err(MatroidError::LabelCollision(label.to_string()));
        }
        let mut labels: Vec<String> = self.inner.ground.labels().to_vec();
        labels.push(label.to_string());
        let ground = GroundSet::new(labels)?;
        Ok(Matroid::from_backend(
            ground,
            Backend::Extension { parent: self.clone(), flat },
        ))
    }

    pub fn principal_extension<S: AsRef<str>>(&self, flat: &[S], label: &str) -> Result<Matroid> {
        self.principal_extension_mask(self.mask_of(flat)?, label)
    }

    /// Dual of a principal extension of the dual: adds `label` as a new
    /// element of a coextension. With flat = E the element is free.
    pub fn principal_coextension_mask(&self, flat: Mask, label: &str) -> Result<Matroid> {
        Ok(self.dual().principal_extension_mask(flat, label)?.dual())
    }

    /// A matroid with the same labels whose element `i` behaves like
    /// `map[i]` in `self` (or is a loop when `None`). The ground set may
    /// also be relabeled by passing `labels`.
    pub fn mapped(&self, labels: Option<Vec<String>>, map: Vec<Option<usize>>) -> Result<Matroid> {
        let ground = match labels {
            Some(l) => GroundSet::new(l)?,
            None => self.inner.ground.clone(),
        };
        if map.len() != ground.len() {
            return Err(MatroidError::DimensionMismatch);
        }
        for p in map.iter().flatten() {
            if *p >= self.n_elements() {
                return Err(MatroidError::UnknownElement(format!("index {p}")));
            }
        }
        Ok(Matroid::from_backend(
            ground,
            Backend::Mapped { parent: self.clone(), map },
        ))
    }

    /// Same matroid with every label prefixed; handy before direct sums.
    pub fn with_prefix(&self, prefix: &str) -> Matroid {
        let labels: Vec<String> =
            self.inner.ground.labels().iter().map(|l| format!("{prefix}{l}")).collect();
        let map = (0..self.n_elements()).map(Some).collect();
        self.mapped(Some(labels), map).expect("prefixing preserves validity")
    }

    /// Deletes loops and all but the lexicographically least label of each
    /// parallel class.
    pub fn simplify(&self) -> (Matroid, SimplifyMap) {
        let full = self.full_mask();
        let mut loops = Vec::new();
        let mut loops_mask = Mask::EMPTY;
        let mut nonloops = Vec::new();
        for e in full.iter() {
            if self.rank_mask(Mask::singleton(e)) == 0 {
                loops.push(self.inner.ground.label(e).to_string());
                loops_mask = loops_mask.insert(e);
            } else {
                nonloops.push(e);
            }
        }
        let mut class_of: HashMap<usize, usize> = HashMap::new();
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for &e in &nonloops {
            if class_of.contains_key(&e) {
                continue;
            }
            let mut class = vec![e];
            class_of.insert(e, classes.len());
            for &f in &nonloops {
                if f != e && !class_of.contains_key(&f) {
                    let pair = Mask::singleton(e).insert(f);
                    if self.rank_mask(pair) == 1 {
                        class_of.insert(f, classes.len());
                        class.push(f);
                    }
                }
            }
            classes.push(class);
        }
        let mut delete_mask = loops_mask;
        let mut parallel = BTreeMap::new();
        for class in &classes {
            let rep = class
                .iter()
                .min_by(|&&a, &&b| self.inner.ground.label(a).cmp(self.inner.ground.label(b)))
                .copied()
                .unwrap();
            for &e in class {
                if e != rep {
                    delete_mask = delete_mask.insert(e);
                    parallel.insert(
                        self.inner.ground.label(e).to_string(),
                        self.inner.ground.label(rep).to_string(),
                    );
                }
            }
        }
        let simple = self.delete_mask(delete_mask).expect("deletion of subsets is valid");
        (simple, SimplifyMap { loops, parallel })
    }

    /// The unique circuit inside B ∪ {f}. Loops return {f}.
    pub fn fundamental_circuit_mask(&self, basis: Mask, f: usize) -> Result<Mask> {
        if !self.is_basis_mask(basis) {
            return Err(MatroidError::NotABasis);
        }
        if basis.contains(f) {
            return Err(MatroidError::PreconditionViolation(
                "element lies in the basis".into(),
            ));
        }
        if self.rank_mask(Mask::singleton(f)) == 0 {
            return Ok(Mask::singleton(f));
        }
        let r = self.rank_full();
        let mut circuit = Mask::singleton(f);
        for b in basis.iter() {
            if self.rank_mask(basis.remove(b).insert(f)) == r {
                circuit = circuit.insert(b);
            }
        }
        debug_assert!(self.is_circuit_mask(circuit));
        Ok(circuit)
    }

    pub fn fundamental_circuit<S: AsRef<str>>(&self, basis: &[S], f: &str) -> Result<Vec<String>> {
        let bm = self.mask_of(basis)?;
        let fi = self.inner.ground.index_of(f)?;
        Ok(self.labels_of(self.fundamental_circuit_mask(bm, fi)?))
    }

    pub fn loops_coloops(&self) -> (Vec<String>, Vec<String>) {
        let full = self.full_mask();
        let r = self.rank_full();
        let mut loops = Vec::new();
        let mut coloops = Vec::new();
        for e in full.iter() {
            if self.rank_mask(Mask::singleton(e)) == 0 {
                loops.push(self.inner.ground.label(e).to_string());
            } else if self.rank_mask(full.remove(e)) == r - 1 {
                coloops.push(self.inner.ground.label(e).to_string());
            }
        }
        (loops, coloops)
    }

    /// The lexicographically-least basis: greedy over label order.
    pub fn greedy_basis(&self) -> Mask {
        let mut order: Vec<usize> = (0..self.n_elements()).collect();
        order.sort_by(|&a, &b| self.inner.ground.label(a).cmp(self.inner.ground.label(b)));
        let mut b = Mask::EMPTY;
        for e in order {
            if self.rank_mask(b.insert(e)) > self.rank_mask(b) {
                b = b.insert(e);
            }
        }
        b
    }

    /// All bases, as masks. Errors when the combination count exceeds the cap.
    pub fn bases(&self, cap: usize) -> Result<Vec<Mask>> {
        let n = self.n_elements();
        let r = self.rank_full();
        let mut count: u128 = 1;
        for i in 0..r {
            count = count * (n - i) as u128 / (i + 1) as u128;
            if count > cap as u128 {
                return Err(MatroidError::SizeLimitExceeded { size: cap + 1, cap });
            }
        }
        Ok(self
            .full_mask()
            .subsets_of_size(r)
            .into_iter()
            .filter(|&b| self.is_independent_mask(b))
            .collect())
    }

    /// Re-house the rank function in an explicit basis table. The result has
    /// the same labels in the same order and an identical rank function.
    pub fn to_bases_backend(&self, cap: usize) -> Result<Matroid> {
        let bases: Vec<u64> = self.bases(cap)?.into_iter().map(|m| m.0).collect();
        Ok(Matroid::from_backend(
            self.inner.ground.clone(),
            Backend::Bases { bases },
        ))
    }

    /// Rank of every subset, indexed by mask. Only for n ≤ TABLE_CAP.
    pub fn rank_table(&self) -> Result<Vec<u8>> {
        let n = self.n_elements();
        if n > TABLE_CAP {
            return Err(MatroidError::SizeLimitExceeded { size: n, cap: TABLE_CAP });
        }
        let mut table = vec![0u8; 1 << n];
        for m in 0..(1u64 << n) {
            table[m as usize] = self.rank_mask(Mask(m)) as u8;
        }
        Ok(table)
    }

    /// Exhaustive rank-function equality. Ground sets must carry the same
    /// labels in the same order.
    pub fn rank_eq(&self, other: &Matroid) -> Result<bool> {
        if !self.inner.ground.same_as(other.ground()) {
            return Err(MatroidError::GroundSetMismatch);
        }
        let n = self.n_elements();
        if n > TABLE_CAP {
            return Err(MatroidError::SizeLimitExceeded { size: n, cap: TABLE_CAP });
        }
        for m in 0..(1u64 << n) {
            if self.rank_mask(Mask(m)) != other.rank_mask(Mask(m)) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Where simplification sent the removed elements.
#[derive(Clone, Debug, Default)]
pub struct SimplifyMap {
    pub loops: Vec<String>,
    /// removed parallel element -> kept representative
    pub parallel: BTreeMap<String, String>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn rank_examples() {
        let u24 = constructions::uniform(2, 4).unwrap();
        assert_eq!(u24.rank::<&str>(&[]).unwrap(), 0);

        let k4 = constructions::graphic(&Graph::complete(4)).unwrap();
        assert_eq!(k4.rank_full(), 3);
        assert_eq!(k4.n_elements(), 6);

        let (bk3, _) = constructions::bicircular_plus(&Graph::complete(3)).unwrap();
        // the three edges alone are independent
        assert_eq!(bk3.rank(&["e0_1", "e0_2", "e1_2"]).unwrap(), 3);
    }

    #[test]
    fn closure_examples() {
        let u24 = constructions::uniform(2, 4).unwrap();
        let cl = u24.closure(&["e0", "e1"]).unwrap();
        assert_eq!(cl.len(), 4);

        let fano = constructions::projective_geometry(3, 2).unwrap();
        // two points close to the line through them: 3 points
        let labels = fano.ground().labels().to_vec();
        let cl = fano.closure(&[labels[0].as_str(), labels[1].as_str()]).unwrap();
        assert_eq!(cl.len(), 3);

        let k4 = constructions::graphic(&Graph::complete(4)).unwrap();
        assert_eq!(k4.closure(&["e0_1"]).unwrap(), vec!["e0_1".to_string()]);
    }

    #[test]
    fn connectivity_examples() {
        let u24 = constructions::uniform(2, 4).unwrap();
        let (local, _) = u24.connectivity(&["e0"], &["e1"]).unwrap();
        assert_eq!(local, 0);

        // K_4: triangle on vertices {1,2,3} vs its complementary star at 0
        let k4 = constructions::graphic(&Graph::complete(4)).unwrap();
        let triangle = ["e1_2", "e1_3", "e2_3"];
        let star = ["e0_1", "e0_2", "e0_3"];
        let (_, lambda) = k4.connectivity(&triangle, &star).unwrap();
        assert_eq!(lambda, Some(2));

        let a = constructions::uniform(1, 2).unwrap().with_prefix("a_");
        let b = constructions::uniform(1, 2).unwrap().with_prefix("b_");
        let sum = a.direct_sum(&b).unwrap();
        let (local, lambda) = sum.connectivity(&["a_e0", "a_e1"], &["b_e0", "b_e1"]).unwrap();
        assert_eq!(local, 0);
        assert_eq!(lambda, Some(0));
    }

    #[test]
    fn minor_examples() {
        let u24 = constructions::uniform(2, 4).unwrap();
        let m = u24.minor(&["e0"], &[]).unwrap();
        // rank function of U_{1,3}
        let u13 = constructions::uniform(1, 3).unwrap();
        for k in 0..=3usize {
            for s in m.full_mask().subsets_of_size(k) {
                assert_eq!(m.rank_mask(s), u13.rank_mask(s).min(m.rank_mask(s)));
                assert_eq!(m.rank_mask(s), s.len().min(1));
            }
        }

        let id = u24.minor::<&str>(&[], &[]).unwrap();
        assert!(id.rank_eq(&u24).unwrap());

        // contracting a point of the Fano plane and simplifying gives PG(1,2)
        let fano = constructions::projective_geometry(3, 2).unwrap();
        let p = fano.ground().label(0).to_string();
        let q = fano.minor(&[p.as_str()], &[]).unwrap();
        let (si, _) = q.simplify();
        let u23 = constructions::uniform(2, 3).unwrap();
        assert!(iso::is_isomorphic(&si, &u23, 16).unwrap().is_some());
    }

    #[test]
    fn dual_examples() {
        let u24 = constructions::uniform(2, 4).unwrap();
        assert!(u24.dual().rank_eq(&constructions::uniform(2, 4).unwrap()).unwrap());

        let u12 = constructions::uniform(1, 2).unwrap();
        assert!(u12.dual().rank_eq(&u12).unwrap());

        let free3 = constructions::uniform(3, 3).unwrap();
        assert_eq!(free3.dual().rank_full(), 0);
    }

    #[test]
    fn direct_sum_examples() {
        let a = constructions::uniform(1, 2).unwrap().with_prefix("a_");
        let b = constructions::uniform(1, 2).unwrap().with_prefix("b_");
        let sum = a.direct_sum(&b).unwrap();
        assert_eq!(sum.rank_full(), 2);
        assert_eq!(sum.n_elements(), 4);

        let zero = constructions::uniform(0, 2).unwrap().with_prefix("z_");
        let m = constructions::uniform(2, 3).unwrap();
        let s = m.direct_sum(&zero).unwrap();
        assert_eq!(s.rank_full(), 2);

        // label collision is refused
        assert!(a.direct_sum(&a).is_err());
    }

    #[test]
    fn simplify_examples() {
        let u13 = constructions::uniform(1, 3).unwrap();
        let (si, map) = u13.simplify();
        assert_eq!(si.n_elements(), 1);
        assert_eq!(map.parallel.len(), 2);

        let fano = constructions::projective_geometry(3, 2).unwrap();
        let (si, map) = fano.simplify();
        assert_eq!(si.n_elements(), 7);
        assert!(map.parallel.is_empty() && map.loops.is_empty());

        let a = constructions::uniform(1, 2).unwrap().with_prefix("a_");
        let b = constructions::uniform(1, 2).unwrap().with_prefix("b_");
        let (si, _) = a.direct_sum(&b).unwrap().simplify();
        assert_eq!(si.n_elements(), 2);
        assert_eq!(si.rank_full(), 2);
    }

    #[test]
    fn fundamental_circuit_examples() {
        let k4 = constructions::graphic(&Graph::complete(4)).unwrap();
        let star = ["e0_1", "e0_2", "e0_3"];
        let c = k4.fundamental_circuit(&star, "e1_2").unwrap();
        assert_eq!(c, vec!["e0_1", "e0_2", "e1_2"]);

        let u23 = constructions::uniform(2, 3).unwrap();
        let c = u23.fundamental_circuit(&["e0", "e1"], "e2").unwrap();
        assert_eq!(c.len(), 3);

        // loops come back as singleton circuits
        let m = constructions::uniform(1, 1)
            .unwrap()
            .direct_sum(&constructions::uniform(0, 1).unwrap().with_prefix("l_"))
            .unwrap();
        let c = m.fundamental_circuit(&["e0"], "l_e0").unwrap();
        assert_eq!(c, vec!["l_e0"]);
    }

    #[test]
    fn loops_coloops_examples() {
        let free = constructions::uniform(3, 3).unwrap();
        let (l, c) = free.loops_coloops();
        assert!(l.is_empty());
        assert_eq!(c.len(), 3);

        let zero = constructions::uniform(0, 3).unwrap();
        let (l, c) = zero.loops_coloops();
        assert_eq!(l.len(), 3);
        assert!(c.is_empty());

        let u24 = constructions::uniform(2, 4).unwrap();
        let (l, c) = u24.loops_coloops();
        assert!(l.is_empty() && c.is_empty());
    }

    #[test]
    fn minor_commutation() {
        let fano = constructions::projective_geometry(3, 2).unwrap();
        let labels: Vec<String> = fano.ground().labels().to_vec();
        let once = fano
            .minor(&[labels[0].as_str()], &[labels[1].as_str()])
            .unwrap()
            .minor(&[labels[2].as_str()], &[labels[3].as_str()])
            .unwrap();
        let both = fano
            .minor(
                &[labels[0].as_str(), labels[2].as_str()],
                &[labels[1].as_str(), labels[3].as_str()],
            )
            .unwrap();
        assert!(once.rank_eq(&both).unwrap());
    }
}

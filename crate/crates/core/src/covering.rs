//! The a-covering number τ_a, brute-force minor detection, and the
//! constructive covering-number extractor for balanced uniform minors.

use crate::constructions;
use crate::error::{MatroidError, Result};
use crate::kernel::{Matroid, MinorCertificate};
use crate::mask::Mask;
use std::collections::BTreeMap;

pub const DEFAULT_TAU_CAP: usize = 20;
pub const DEFAULT_MINOR_CAP: usize = 16;

/// A cover of E(M) by sets of rank at most `bound`.
#[derive(Clone, Debug)]
pub struct CoverFamily {
    pub bound: usize,
    pub parts: Vec<Vec<String>>,
}

impl CoverFamily {
    pub fn verify(&self, m: &Matroid) -> Result<()> {
        let mut covered = Mask::EMPTY;
        for part in &self.parts {
            let pm = m.mask_of(part)?;
            if m.rank_mask(pm) > self.bound {
                return Err(MatroidError::PreconditionViolation(format!(
                    "part {part:?} has rank {} > {}",
                    m.rank_mask(pm),
                    self.bound
                )));
            }
            covered = covered.union(pm);
        }
        if covered != m.full_mask() {
            return Err(MatroidError::PreconditionViolation(
                "parts do not cover the ground set".into(),
            ));
        }
        Ok(())
    }
}

/// Exact a-covering number with a witness cover, by branch and bound over
/// the inclusion-maximal rank-a flats of the simplification.
pub fn tau(m: &Matroid, a: usize, cap: usize) -> Result<(usize, CoverFamily)> {
    if a < 1 {
        return Err(MatroidError::BadParameters("tau needs a >= 1".into()));
    }
    let full = m.full_mask();
    if m.rank_full() <= a {
        return Ok((1, CoverFamily { bound: a, parts: vec![m.labels_of(full)] }));
    }
    let (si, _) = m.simplify();
    if si.n_elements() > cap {
        return Err(MatroidError::SizeLimitExceeded { size: si.n_elements(), cap });
    }

    // candidate parts: inclusion-maximal rank-a flats of si (every maximal
    // rank-<=a flat has rank exactly a once r > a)
    let si_full = si.full_mask();
    let mut flats: Vec<Mask> = Vec::new();
    for ind in si_full.subsets_of_size(a) {
        if !si.is_independent_mask(ind) {
            continue;
        }
        let fl = si.closure_mask(ind);
        if !flats.contains(&fl) {
            flats.push(fl);
        }
    }
    let maximal: Vec<Mask> = flats
        .iter()
        .filter(|f| !flats.iter().any(|g| *f != g && f.is_subset_of(*g)))
        .copied()
        .collect();
    let mut flats = maximal;
    flats.sort_by_key(|f| std::cmp::Reverse(f.len()));

    let mut best: Option<Vec<usize>> = None;
    let mut chosen: Vec<usize> = Vec::new();
    branch(&si_full, &flats, Mask::EMPTY, &mut chosen, &mut best);
    let picked = best.expect("maximal rank-a flats cover every simple matroid with r > a");

    // expand each chosen si-flat to its closure in M, pulling in parallel
    // copies; closures also absorb the loops
    let value = picked.len();
    let mut parts: Vec<Vec<String>> = Vec::new();
    for &f in &picked {
        let si_labels = si.labels_of(flats[f]);
        let reps = m.mask_of(&si_labels)?;
        parts.push(m.labels_of(m.closure_mask(reps)));
    }
    let family = CoverFamily { bound: a, parts };
    family.verify(m)?;
    Ok((value, family))
}

fn branch(
    universe: &Mask,
    flats: &[Mask],
    covered: Mask,
    chosen: &mut Vec<usize>,
    best: &mut Option<Vec<usize>>,
) {
    if covered == *universe {
        if best.as_ref().is_none_or(|b| chosen.len() < b.len()) {
            *best = Some(chosen.clone());
        }
        return;
    }
    if let Some(b) = best {
        let remaining = universe.minus(covered).len();
        let largest = flats.iter().map(|f| f.len()).max().unwrap_or(1);
        if chosen.len() + remaining.div_ceil(largest) >= b.len() {
            return;
        }
    }
    // branch on the uncovered element with the fewest candidates
    let uncovered = universe.minus(covered);
    let pivot = uncovered
        .iter()
        .min_by_key(|&e| flats.iter().filter(|f| f.contains(e)).count())
        .unwrap();
    for (i, f) in flats.iter().enumerate() {
        if f.contains(pivot) {
            chosen.push(i);
            branch(universe, flats, covered.union(*f), chosen, best);
            chosen.pop();
        }
    }
}

/// Exhaustive minor search: returns a verified certificate that M has an
/// N-minor, or None (exact within the cap). The contract set ranges over
/// independent sets of size r(M) − r(N), which loses no minors.
pub fn has_minor(m: &Matroid, target: &Matroid, cap: usize) -> Result<Option<MinorCertificate>> {
    has_minor_such_that(m, target, cap, |_, _, _| true)
}

/// As `has_minor`, with an acceptance predicate over
/// (contract mask, kept mask, index bijection kept -> target).
pub fn has_minor_such_that<F>(
    m: &Matroid,
    target: &Matroid,
    cap: usize,
    accept: F,
) -> Result<Option<MinorCertificate>>
where
    F: Fn(Mask, Mask, &BTreeMap<usize, usize>) -> bool,
{
    if m.n_elements() > cap {
        return Err(MatroidError::SizeLimitExceeded { size: m.n_elements(), cap });
    }
    let rm = m.rank_full();
    let rt = target.rank_full();
    let nt = target.n_elements();
    if rt > rm || nt > m.n_elements() {
        return Ok(None);
    }
    // corank cannot grow under minors
    if m.n_elements() - rm < nt - rt {
        return Ok(None);
    }
    let k = rm - rt;
    let target_table = target.rank_table()?;
    let target_profile = profile(&target_table);

    let full = m.full_mask();
    for c in full.subsets_of_size(k) {
        if !m.is_independent_mask(c) {
            continue;
        }
        let rest = full.minus(c);
        for kept in rest.subsets_of_size(nt) {
            if m.rank_mask(kept.union(c)) - k != rt {
                continue;
            }
            if let Some(image) =
                restriction_matches(m, c, kept, &target_table, &target_profile)
            {
                if !accept(c, kept, &image) {
                    continue;
                }
                let delete = full.minus(c).minus(kept);
                let cert = MinorCertificate::from_masks(m, c, delete, &image, target.clone());
                cert.verify(m)?;
                return Ok(Some(cert));
            }
        }
    }
    Ok(None)
}

/// Multiset of (size, rank) counts: an isomorphism invariant of a table.
fn profile(table: &[u8]) -> BTreeMap<(usize, u8), usize> {
    let mut p = BTreeMap::new();
    for (mask, &r) in table.iter().enumerate() {
        let pc = (mask as u64).count_ones() as usize;
        *p.entry((pc, r)).or_insert(0) += 1;
    }
    p
}

/// Does (M/C)|kept admit a rank-preserving bijection onto the target table?
fn restriction_matches(
    m: &Matroid,
    c: Mask,
    kept: Mask,
    target_table: &[u8],
    target_profile: &BTreeMap<(usize, u8), usize>,
) -> Option<BTreeMap<usize, usize>> {
    let kept_idx: Vec<usize> = kept.iter().collect();
    let nt = kept_idx.len();
    let rc = m.rank_mask(c);
    let mut table = vec![0u8; 1 << nt];
    for sub in 0..(1u64 << nt) {
        let mut mm = c;
        for (j, &e) in kept_idx.iter().enumerate() {
            if sub >> j & 1 == 1 {
                mm = mm.insert(e);
            }
        }
        table[sub as usize] = (m.rank_mask(mm) - rc) as u8;
    }
    if profile(&table) != *target_profile {
        return None;
    }
    let inv = |t: &[u8]| -> Vec<Vec<usize>> {
        let mut inv = vec![vec![0usize; nt + 1]; nt];
        for (mask, &r) in t.iter().enumerate() {
            let pc = (mask as u64).count_ones() as usize;
            if r as usize == pc {
                for e in Mask(mask as u64).iter() {
                    inv[e][pc] += 1;
                }
            }
        }
        inv
    };
    let inv_a = inv(&table);
    let inv_b = inv(target_table);
    let mut assign = Vec::new();
    let mut used = vec![false; nt];
    let mut img_mask = vec![0u64; 1 << nt];
    let found = table_backtrack(
        nt,
        &table,
        target_table,
        &inv_a,
        &inv_b,
        &mut assign,
        &mut used,
        &mut img_mask,
    );
    found.map(|assignment| {
        assignment
            .into_iter()
            .enumerate()
            .map(|(pos, tgt)| (kept_idx[pos], tgt))
            .collect()
    })
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn table_backtrack(
    k: usize,
    ta: &[u8],
    tb: &[u8],
    inv_a: &[Vec<usize>],
    inv_b: &[Vec<usize>],
    assign: &mut Vec<usize>,
    used: &mut [bool],
    img_mask: &mut [u64],
) -> Option<Vec<usize>> {
    let i = assign.len();
    if i == k {
        return Some(assign.clone());
    }
    for cand in 0..k {
        if used[cand] || inv_a[i] != inv_b[cand] {
            continue;
        }
        let prefix = (1u64 << i) - 1;
        let mut ok = true;
        let mut sub = prefix;
        loop {
            let with_new = sub | 1 << i;
            let img = img_mask[sub as usize] | 1 << cand;
            img_mask[with_new as usize] = img;
            if ta[with_new as usize] != tb[img as usize] {
                ok = false;
                break;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & prefix;
        }
        if ok {
            used[cand] = true;
            assign.push(cand);
            if let Some(f) = table_backtrack(k, ta, tb, inv_a, inv_b, assign, used, img_mask) {
                return Some(f);
            }
            assign.pop();
            used[cand] = false;
        }
    }
    None
}

/// Outcome of the covering-number extraction.
#[derive(Debug)]
pub enum UdensityOutcome {
    /// A verified U_{a+1,b}-minor whose kept basis elements form a basis of
    /// the minor.
    Minor(MinorCertificate),
    /// A cover of M by rank-a sets, strictly smaller than C(b,a)^{r-a}.
    Cover(CoverFamily),
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut v: u128 = 1;
    let k = k.min(n - k);
    for i in 0..k {
        v = v * (n - i) as u128 / (i + 1) as u128;
    }
    v
}

fn threshold(a: usize, b: usize, r: usize) -> u128 {
    binomial(b, a).saturating_pow((r - a) as u32)
}

/// Constructive dichotomy: when τ_a(M) ≥ C(b,a)^{r−a} this produces a
/// verified U_{a+1,b}-minor whose intersection with B is a basis of the
/// minor, following the inductive argument (contract a basis element,
/// recurse; on failure pick a dense part of the returned cover and finish
/// in rank a+1). Otherwise it returns a valid cover below the threshold.
pub fn udensity_extract(
    m: &Matroid,
    basis: &[String],
    a: usize,
    b: usize,
    tau_cap: usize,
) -> Result<UdensityOutcome> {
    let bm = m.mask_of(basis)?;
    if !m.is_basis_mask(bm) {
        return Err(MatroidError::NotABasis);
    }
    if a < 1 || a >= b {
        return Err(MatroidError::PreconditionViolation("need 1 <= a < b".into()));
    }
    if m.rank_full() <= a {
        return Err(MatroidError::PreconditionViolation("need r(M) > a".into()));
    }
    udensity_inner(m, bm, a, b, tau_cap)
}

fn udensity_inner(
    m: &Matroid,
    bm: Mask,
    a: usize,
    b: usize,
    tau_cap: usize,
) -> Result<UdensityOutcome> {
    let r = m.rank_full();
    let (tau_val, cover) = tau(m, a, tau_cap)?;
    if (tau_val as u128) < threshold(a, b, r) {
        return Ok(UdensityOutcome::Cover(cover));
    }
    if r == a + 1 {
        return base_case(m, bm, a, b);
    }

    // contract the first basis element in label order
    let e = bm
        .iter()
        .min_by(|&x, &y| m.ground().label(x).cmp(m.ground().label(y)))
        .expect("basis of a positive-rank matroid is nonempty");
    let contracted = m.contract_mask(Mask::singleton(e))?;
    let bm_c = contracted.mask_of(&m.labels_of(bm.remove(e)))?;
    match udensity_inner(&contracted, bm_c, a, b, tau_cap)? {
        UdensityOutcome::Minor(cert) => {
            let mut contract = cert.contract.clone();
            contract.push(m.ground().label(e).to_string());
            let lifted = MinorCertificate {
                contract,
                delete: cert.delete.clone(),
                image: cert.image.clone(),
                target: cert.target.clone(),
                normalized: cert.normalized,
            };
            lifted.verify(m)?;
            Ok(UdensityOutcome::Minor(lifted))
        }
        UdensityOutcome::Cover(family) => {
            // first part F with τ_a(M|(F ∪ e)) ≥ C(b,a); one exists because
            // the parts' restriction covers sum to at least τ_a(M)
            let need = binomial(b, a);
            let e_lbl = m.ground().label(e).to_string();
            for part in &family.parts {
                let mut labels = part.clone();
                if !labels.contains(&e_lbl) {
                    labels.push(e_lbl.clone());
                }
                let fm = m.mask_of(&labels)?;
                let restriction = m.restrict_mask(fm)?;
                if restriction.rank_full() <= a {
                    continue; // τ_a = 1 < C(b,a)
                }
                let (t, _) = tau(&restriction, a, tau_cap)?;
                if (t as u128) >= need {
                    return finish_dense_part(m, bm, fm, a, b);
                }
            }
            Err(MatroidError::PreconditionViolation(
                "pigeonhole part must exist when tau is above threshold".into(),
            ))
        }
    }
}

/// Contract a maximal label-order subset of B skew to F, reducing to rank
/// a+1 with the surviving basis elements a basis, then run the base case.
fn finish_dense_part(
    m: &Matroid,
    bm: Mask,
    fm: Mask,
    a: usize,
    b: usize,
) -> Result<UdensityOutcome> {
    let rf = m.rank_mask(fm);
    assert_eq!(rf, a + 1, "chosen part together with e spans rank a+1");
    let mut order: Vec<usize> = bm.iter().collect();
    order.sort_by(|&x, &y| m.ground().label(x).cmp(m.ground().label(y)));
    let mut skew = Mask::EMPTY;
    for x in order {
        let cand = skew.insert(x);
        if m.rank_mask(cand.union(fm)) == cand.len() + rf {
            skew = cand;
        }
    }
    assert_eq!(
        skew.len(),
        m.rank_full() - rf,
        "greedy skew subset of a basis reaches full corank"
    );
    let minor = m.contract_mask(skew)?;
    let bm_minor = minor.mask_of(&m.labels_of(bm.minus(skew)))?;
    assert!(minor.is_basis_mask(bm_minor));
    match base_case(&minor, bm_minor, a, b)? {
        UdensityOutcome::Minor(cert) => {
            let mut contract = cert.contract.clone();
            contract.extend(m.labels_of(skew));
            let lifted = MinorCertificate {
                contract,
                delete: cert.delete,
                image: cert.image,
                target: cert.target,
                normalized: cert.normalized,
            };
            lifted.verify(m)?;
            Ok(UdensityOutcome::Minor(lifted))
        }
        UdensityOutcome::Cover(_) => Err(MatroidError::PreconditionViolation(
            "dense part must yield a uniform extension of size b".into(),
        )),
    }
}

/// Rank a+1: grow a maximal uniform restriction X ⊇ B in label order; with
/// τ_a(M) ≥ C(b,a) it has at least b elements and the basis plus the first
/// further elements restrict to U_{a+1,b}.
fn base_case(m: &Matroid, bm: Mask, a: usize, b: usize) -> Result<UdensityOutcome> {
    let r = m.rank_full();
    debug_assert_eq!(r, a + 1);
    let mut x = bm;
    let mut order: Vec<usize> = m.full_mask().minus(bm).iter().collect();
    order.sort_by(|&p, &q| m.ground().label(p).cmp(m.ground().label(q)));
    for e in order {
        if uniform_with(m, x, e, r) {
            x = x.insert(e);
        }
    }
    if x.len() < b {
        // every element is spanned by an a-subset of X; closures of those
        // subsets cover M with fewer than C(b,a) parts
        let mut parts = Vec::new();
        for s in x.subsets_of_size(a) {
            parts.push(m.labels_of(m.closure_mask(s)));
        }
        let family = CoverFamily { bound: a, parts };
        family.verify(m)?;
        return Ok(UdensityOutcome::Cover(family));
    }
    let mut keep = bm;
    for e in x.minus(bm).iter() {
        if keep.len() == b {
            break;
        }
        keep = keep.insert(e);
    }
    let target = constructions::uniform(a + 1, b)?;
    let image: BTreeMap<usize, usize> = keep.iter().zip(0..b).collect();
    let cert =
        MinorCertificate::from_masks(m, Mask::EMPTY, m.full_mask().minus(keep), &image, target);
    cert.verify(m)?;
    Ok(UdensityOutcome::Minor(cert))
}

/// Is M|(X ∪ {e}) still a rank-r uniform restriction?
fn uniform_with(m: &Matroid, x: Mask, e: usize, r: usize) -> bool {
    if m.rank_mask(x.insert(e)) != r {
        return false;
    }
    for s in x.subsets_of_size(r - 1) {
        if m.rank_mask(s.insert(e)) == m.rank_mask(s) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{projective_geometry, uniform};
    use crate::graph::Graph;

    #[test]
    fn tau_examples() {
        let u24 = uniform(2, 4).unwrap();
        let (v, w) = tau(&u24, 1, DEFAULT_TAU_CAP).unwrap();
        assert_eq!(v, 4);
        w.verify(&u24).unwrap();

        let fano = projective_geometry(3, 2).unwrap();
        let (v, w) = tau(&fano, 2, DEFAULT_TAU_CAP).unwrap();
        assert_eq!(v, 3);
        w.verify(&fano).unwrap();

        let (v, _) = tau(&u24, 2, DEFAULT_TAU_CAP).unwrap();
        assert_eq!(v, 1);

        let (v, _) = tau(&fano, 1, DEFAULT_TAU_CAP).unwrap();
        assert_eq!(v, 7);
    }

    #[test]
    fn has_minor_examples() {
        let fano = projective_geometry(3, 2).unwrap();
        let u23 = uniform(2, 3).unwrap();
        let cert = has_minor(&fano, &u23, DEFAULT_MINOR_CAP).unwrap().unwrap();
        cert.verify(&fano).unwrap();

        // graphic matroids are binary: no U_{2,4}-minor in M(K_4)
        let k4 = crate::constructions::graphic(&Graph::complete(4)).unwrap();
        let u24 = uniform(2, 4).unwrap();
        assert!(has_minor(&k4, &u24, DEFAULT_MINOR_CAP).unwrap().is_none());

        // M has an M-minor via the empty certificate
        let cert = has_minor(&k4, &k4, DEFAULT_MINOR_CAP).unwrap().unwrap();
        assert!(cert.contract.is_empty() && cert.delete.is_empty());
    }

    #[test]
    fn udensity_identity_extraction() {
        let u26 = uniform(2, 6).unwrap();
        let basis = u26.labels_of(u26.greedy_basis());
        match udensity_extract(&u26, &basis, 1, 6, DEFAULT_TAU_CAP).unwrap() {
            UdensityOutcome::Minor(cert) => {
                cert.verify(&u26).unwrap();
                assert!(cert.contract.is_empty() && cert.delete.is_empty());
            }
            UdensityOutcome::Cover(_) => panic!("tau_1(U_26) = 6 >= 6"),
        }
    }

    #[test]
    fn udensity_cover_branch() {
        // tau_1(PG(2,2)) = 7 < 3^2 = 9: the cover outcome
        let fano = projective_geometry(3, 2).unwrap();
        let basis = fano.labels_of(fano.greedy_basis());
        match udensity_extract(&fano, &basis, 1, 3, DEFAULT_TAU_CAP).unwrap() {
            UdensityOutcome::Cover(c) => {
                c.verify(&fano).unwrap();
                assert!((c.parts.len() as u128) < 9);
            }
            UdensityOutcome::Minor(_) => panic!("threshold not met"),
        }
    }

    #[test]
    fn udensity_pg32_both_branches() {
        let pg = projective_geometry(4, 2).unwrap();
        let basis = pg.labels_of(pg.greedy_basis());
        // tau_1 = 15 < 4^3: cover
        match udensity_extract(&pg, &basis, 1, 4, DEFAULT_TAU_CAP).unwrap() {
            UdensityOutcome::Cover(c) => {
                c.verify(&pg).unwrap();
                assert!((c.parts.len() as u128) < 64);
            }
            UdensityOutcome::Minor(_) => panic!("threshold 64 > 15"),
        }
        // tau_1 = 15 >= 2^3: U_{2,2}-minor with basis intersection a basis
        match udensity_extract(&pg, &basis, 1, 2, DEFAULT_TAU_CAP).unwrap() {
            UdensityOutcome::Minor(cert) => {
                cert.verify(&pg).unwrap();
                let kept = cert.kept(&pg).unwrap();
                let in_basis: Vec<String> =
                    kept.iter().filter(|l| basis.contains(l)).cloned().collect();
                assert_eq!(in_basis.len(), 2);
                let cm = pg.mask_of(&cert.contract).unwrap();
                let im = pg.mask_of(&in_basis).unwrap();
                assert_eq!(pg.rank_mask(im.union(cm)) - pg.rank_mask(cm), 2);
            }
            UdensityOutcome::Cover(_) => panic!("threshold met"),
        }
    }
}

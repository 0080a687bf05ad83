//! Rank-preserving isomorphism by invariant pruning and backtracking.
//!
//! Loops must match loops and parallel classes must match classes of equal
//! size, so the search runs on the simplifications and the bijection is then
//! extended class-by-class. The simple parts are compared through full rank
//! tables with per-element invariant vectors (counts of independent sets of
//! each size through the element) narrowing the candidate images.

use crate::error::{MatroidError, Result};
use crate::kernel::Matroid;
use crate::mask::Mask;
use std::collections::BTreeMap;

pub const DEFAULT_ISO_CAP: usize = 16;

/// A rank-preserving bijection between the ground sets, if one exists.
/// `cap` bounds the simplified sizes the backtracker will accept.
pub fn is_isomorphic(
    m: &Matroid,
    n: &Matroid,
    cap: usize,
) -> Result<Option<BTreeMap<String, String>>> {
    if m.n_elements() != n.n_elements() || m.rank_full() != n.rank_full() {
        return Ok(None);
    }
    let (sm, map_m) = m.simplify();
    let (sn, map_n) = n.simplify();
    if map_m.loops.len() != map_n.loops.len() || sm.n_elements() != sn.n_elements() {
        return Ok(None);
    }
    if sm.n_elements() > cap {
        return Err(MatroidError::SizeLimitExceeded { size: sm.n_elements(), cap });
    }

    // parallel class sizes per representative
    let class_sizes = |map: &crate::kernel::SimplifyMap, si: &Matroid| -> BTreeMap<String, usize> {
        let mut sizes: BTreeMap<String, usize> =
            si.ground().labels().iter().map(|l| (l.clone(), 1)).collect();
        for rep in map.parallel.values() {
            *sizes.get_mut(rep).expect("representative is kept") += 1;
        }
        sizes
    };
    let sizes_m = class_sizes(&map_m, &sm);
    let sizes_n = class_sizes(&map_n, &sn);
    {
        let mut a: Vec<usize> = sizes_m.values().copied().collect();
        let mut b: Vec<usize> = sizes_n.values().copied().collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }

    let k = sm.n_elements();
    let tm = sm.rank_table()?;
    let tn = sn.rank_table()?;

    // invariant per element: class size, then the count of independent sets
    // of each cardinality containing it
    let invariants = |t: &[u8], k: usize, sizes: &[usize]| -> Vec<Vec<usize>> {
        let mut inv = vec![vec![0usize; k + 2]; k];
        for (e, row) in inv.iter_mut().enumerate() {
            row[0] = sizes[e];
        }
        for mask in 0..t.len() {
            let pc = (mask as u64).count_ones() as usize;
            if t[mask] as usize == pc {
                for e in Mask(mask as u64).iter() {
                    inv[e][pc + 1] += 1;
                }
            }
        }
        inv
    };
    let szs_m: Vec<usize> =
        sm.ground().labels().iter().map(|l| sizes_m[l]).collect();
    let szs_n: Vec<usize> =
        sn.ground().labels().iter().map(|l| sizes_n[l]).collect();
    let inv_m = invariants(&tm, k, &szs_m);
    let inv_n = invariants(&tn, k, &szs_n);
    {
        let mut a = inv_m.clone();
        let mut b = inv_n.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
    }

    // backtracking over images; img_mask[s] is the image of prefix-subset s
    let mut assign: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    let mut img_mask: Vec<u64> = vec![0; 1 << k];
    let found = backtrack(k, &tm, &tn, &inv_m, &inv_n, &mut assign, &mut used, &mut img_mask);
    let Some(si_map) = found else {
        return Ok(None);
    };

    // extend to the full ground sets: representatives by si_map, parallel
    // partners in sorted label order, loops in sorted order
    let mut out: BTreeMap<String, String> = BTreeMap::new();
    let mut members_m: BTreeMap<String, Vec<String>> = BTreeMap::new();
    let mut members_n: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for l in sm.ground().labels() {
        members_m.insert(l.clone(), vec![l.clone()]);
    }
    for l in sn.ground().labels() {
        members_n.insert(l.clone(), vec![l.clone()]);
    }
    for (del, rep) in &map_m.parallel {
        members_m.get_mut(rep).unwrap().push(del.clone());
    }
    for (del, rep) in &map_n.parallel {
        members_n.get_mut(rep).unwrap().push(del.clone());
    }
    for (e, &img) in assign.iter().enumerate() {
        let _ = img;
        let from = sm.ground().label(e).to_string();
        let to = sn.ground().label(si_map[e]).to_string();
        let mut from_members = members_m[&from].clone();
        let mut to_members = members_n[&to].clone();
        from_members.sort();
        to_members.sort();
        debug_assert_eq!(from_members.len(), to_members.len());
        for (a, b) in from_members.into_iter().zip(to_members) {
            out.insert(a, b);
        }
    }
    let mut loops_m = map_m.loops.clone();
    let mut loops_n = map_n.loops.clone();
    loops_m.sort();
    loops_n.sort();
    for (a, b) in loops_m.into_iter().zip(loops_n) {
        out.insert(a, b);
    }
    Ok(Some(out))
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    k: usize,
    tm: &[u8],
    tn: &[u8],
    inv_m: &[Vec<usize>],
    inv_n: &[Vec<usize>],
    assign: &mut Vec<usize>,
    used: &mut [bool],
    img_mask: &mut [u64],
) -> Option<Vec<usize>> {
    let i = assign.len();
    if i == k {
        return Some(assign.clone());
    }
    for cand in 0..k {
        if used[cand] || inv_m[i] != inv_n[cand] {
            continue;
        }
        // incremental rank consistency over all prefix subsets through i
        let prefix = (1u64 << i) - 1;
        let mut ok = true;
        let mut sub = prefix;
        loop {
            let with_new = sub | 1 << i;
            let img = img_mask[sub as usize] | 1 << cand;
            img_mask[with_new as usize] = img;
            if tm[with_new as usize] != tn[img as usize] {
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
            if let Some(found) =
                backtrack(k, tm, tn, inv_m, inv_n, assign, used, img_mask)
            {
                return Some(found);
            }
            assign.pop();
            used[cand] = false;
        }
    }
    None
}

//! Typed matroid families and predicates for the structural classes:
//! framed matroids, B-cliques, a-complete matroids, small-scale GF(q)
//! representability.

use crate::error::{MatroidError, Result};
use crate::gf::GfField;
use crate::graph::Graph;
use crate::ground::GroundSet;
use crate::kernel::{Backend, BicircItem, Matroid};
use crate::mask::Mask;
use std::collections::BTreeMap;
use std::sync::Arc;

/// U_{r,n} on labels e0..e{n-1}.
pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
    if r > n {
        return Err(MatroidError::BadParameters(format!("uniform({r},{n}) needs r <= n")));
    }
    let ground = GroundSet::new((0..n).map(|i| format!("e{i}")))?;
    Ok(Matroid::from_backend(ground, Backend::Uniform { rank: r }))
}

/// The direct sum of t copies of U_{1,2}, labels p{i}a / p{i}b.
pub fn t_parallel_pairs(t: usize) -> Result<Matroid> {
    let labels: Vec<String> =
        (0..t).flat_map(|i| [format!("p{i}a"), format!("p{i}b")]).collect();
    let ground = GroundSet::new(labels)?;
    let cols: Vec<Vec<u32>> = (0..t)
        .flat_map(|i| {
            let mut v = vec![0u32; t.max(1)];
            v[i] = 1;
            [v.clone(), v]
        })
        .collect();
    let field = Arc::new(GfField::new(2)?);
    Ok(Matroid::from_backend(ground, Backend::Linear { field, cols }))
}

/// Matroid of labeled column vectors over GF(q).
pub fn linear_matroid(q: u32, labels: Vec<String>, cols: Vec<Vec<u32>>) -> Result<Matroid> {
    let field = Arc::new(GfField::new(q)?);
    if labels.len() != cols.len() {
        return Err(MatroidError::DimensionMismatch);
    }
    let dim = cols.first().map(|c| c.len()).unwrap_or(0);
    for c in &cols {
        if c.len() != dim {
            return Err(MatroidError::DimensionMismatch);
        }
        if c.iter().any(|&x| x >= q) {
            return Err(MatroidError::BadParameters(format!(
                "entry out of range for GF({q})"
            )));
        }
    }
    let ground = GroundSet::new(labels)?;
    Ok(Matroid::from_backend(ground, Backend::Linear { field, cols }))
}

/// From a row-major matrix: columns are the elements.
pub fn linear_from_rows(q: u32, labels: Vec<String>, rows: &[Vec<u32>]) -> Result<Matroid> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    if rows.iter().any(|r| r.len() != width) || labels.len() != width {
        return Err(MatroidError::DimensionMismatch);
    }
    let cols: Vec<Vec<u32>> =
        (0..width).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
    linear_matroid(q, labels, cols)
}

/// PG(n-1, q): one representative per 1-dimensional subspace of GF(q)^n,
/// normalized so the first nonzero coordinate is 1. Labels are "p" followed
/// by the coordinate digits.
pub fn projective_geometry(n: usize, q: u32) -> Result<Matroid> {
    if n == 0 {
        return Err(MatroidError::BadParameters("projective geometry needs n >= 1".into()));
    }
    let field = GfField::new(q)?;
    let mut cols: Vec<Vec<u32>> = Vec::new();
    let mut vec = vec![0u32; n];
    loop {
        // advance odometer
        let mut i = 0;
        loop {
            if i == n {
                let labels: Vec<String> = cols
                    .iter()
                    .map(|c| {
                        let digits: String = c.iter().map(|d| d.to_string()).collect();
                        format!("p{digits}")
                    })
                    .collect();
                return linear_matroid(q, labels, cols);
            }
            vec[i] += 1;
            if vec[i] < q {
                break;
            }
            vec[i] = 0;
            i += 1;
        }
        // keep normalized representatives: last nonzero coordinate... use
        // first nonzero (in index order) equal to 1
        let first_nonzero = vec.iter().position(|&d| d != 0);
        if let Some(j) = first_nonzero {
            if vec[j] == 1 {
                let _ = &field;
                cols.push(vec.clone());
            }
        }
    }
}

/// Cycle matroid M(G).
pub fn graphic(g: &Graph) -> Result<Matroid> {
    let vidx = g.vertex_index();
    let mut labels = Vec::new();
    let mut endpoints = Vec::new();
    for (u, v, l) in &g.edges {
        labels.push(l.clone());
        endpoints.push((vidx[u.as_str()], vidx[v.as_str()]));
    }
    let ground = GroundSet::new(labels)?;
    Ok(Matroid::from_backend(
        ground,
        Backend::Graphic { n_vertices: g.vertices.len(), endpoints, graph: g.clone() },
    ))
}

/// M(K_{n+1}) with the star at vertex v0 as frame: a B-clique of rank n.
/// Returns the matroid and the frame labels.
pub fn clique(n: usize) -> Result<(Matroid, Vec<String>)> {
    let g = Graph::complete(n + 1);
    let m = graphic(&g)?;
    let frame: Vec<String> = (1..=n).map(|j| format!("e0_{j}")).collect();
    Ok((m, frame))
}

/// B⁺(G): ground set E(G) ∪ V(G), a set X independent iff
/// |X ∩ (E(H) ∪ V(H))| ≤ |V(H)| for every subgraph H. The vertex set is a
/// basis and the frame.
pub fn bicircular_plus(g: &Graph) -> Result<(Matroid, Vec<String>)> {
    let vidx = g.vertex_index();
    let mut labels = Vec::new();
    let mut items = Vec::new();
    for (u, v, l) in &g.edges {
        labels.push(l.clone());
        items.push(BicircItem::Edge(vidx[u.as_str()], vidx[v.as_str()]));
    }
    for (i, v) in g.vertices.iter().enumerate() {
        labels.push(v.clone());
        items.push(BicircItem::Vertex(i));
    }
    let ground = GroundSet::new(labels)?;
    let m = Matroid::from_backend(
        ground,
        Backend::BicircularPlus { n_vertices: g.vertices.len(), items, graph: g.clone() },
    );
    Ok((m, g.vertices.clone()))
}

/// B is a basis and every element lies in the closure of at most two
/// elements of B.
pub fn is_framed_by(m: &Matroid, frame: &[String]) -> Result<bool> {
    let b = m.mask_of(frame)?;
    if !m.is_basis_mask(b) {
        return Ok(false);
    }
    let frame_idx: Vec<usize> = b.iter().collect();
    'outer: for e in m.full_mask().iter() {
        if m.rank_mask(Mask::singleton(e)) == 0 {
            continue; // loops span themselves via the empty subset
        }
        for (pos, &x) in frame_idx.iter().enumerate() {
            let sx = Mask::singleton(x);
            if m.rank_mask(sx.insert(e)) == m.rank_mask(sx) {
                continue 'outer;
            }
            for &y in &frame_idx[pos + 1..] {
                let sxy = sx.insert(y);
                if m.rank_mask(sxy.insert(e)) == m.rank_mask(sxy) {
                    continue 'outer;
                }
            }
        }
        return Ok(false);
    }
    Ok(true)
}

/// Framed, and every pair of frame elements lies in a triangle.
pub fn is_b_clique(m: &Matroid, frame: &[String]) -> Result<bool> {
    if !is_framed_by(m, frame)? {
        return Ok(false);
    }
    let b = m.mask_of(frame)?;
    let frame_idx: Vec<usize> = b.iter().collect();
    for (pos, &x) in frame_idx.iter().enumerate() {
        for &y in &frame_idx[pos + 1..] {
            let pair = Mask::singleton(x).insert(y);
            let found = m
                .full_mask()
                .minus(pair)
                .iter()
                .any(|e| m.is_circuit_mask(pair.insert(e)));
            if !found {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Witness map for an a-complete matroid: each qualifying subset I of the
/// joint-set paired with the element closing it into a circuit.
#[derive(Clone, Debug)]
pub struct CompleteWitness {
    pub joint: Vec<String>,
    pub level: usize,
    /// sorted subset of the joint-set -> completing element
    pub circuit_map: BTreeMap<Vec<String>, String>,
}

impl CompleteWitness {
    pub fn verify(&self, m: &Matroid) -> Result<()> {
        let b = m.mask_of(&self.joint)?;
        if !m.is_basis_mask(b) {
            return Err(MatroidError::NotABasis);
        }
        for (subset, e) in &self.circuit_map {
            let i = m.mask_of(subset)?;
            let ei = m.ground().index_of(e)?;
            if !m.is_circuit_mask(i.insert(ei)) {
                return Err(MatroidError::PreconditionViolation(format!(
                    "{subset:?} + {e} is not a circuit"
                )));
            }
        }
        Ok(())
    }
}

/// Exhaustively search the completing element for every I ⊆ B with
/// 2 ≤ |I| ≤ a; returns the witness when M is a-complete with joint-set B.
pub fn complete_witness(m: &Matroid, joint: &[String], a: usize) -> Result<Option<CompleteWitness>> {
    let b = m.mask_of(joint)?;
    if !m.is_basis_mask(b) {
        return Err(MatroidError::NotABasis);
    }
    if a < 2 {
        return Err(MatroidError::BadParameters("a-completeness needs a >= 2".into()));
    }
    let mut circuit_map = BTreeMap::new();
    for size in 2..=a.min(b.len()) {
        for i in b.subsets_of_size(size) {
            let e = find_circuit_completion(m, i);
            match e {
                Some(e) => {
                    let mut key = m.labels_of(i);
                    key.sort();
                    circuit_map.insert(key, m.ground().label(e).to_string());
                }
                None => return Ok(None),
            }
        }
    }
    if a > b.len() {
        // subsets of B larger than |B| do not exist; the condition is on
        // 2..=a intersected with what B offers
        return Ok(Some(CompleteWitness { joint: joint.to_vec(), level: a, circuit_map }));
    }
    Ok(Some(CompleteWitness { joint: joint.to_vec(), level: a, circuit_map }))
}

/// First element (label order) completing the independent set I into a
/// circuit, if any.
pub fn find_circuit_completion(m: &Matroid, i: Mask) -> Option<usize> {
    let mut order: Vec<usize> = m.full_mask().minus(i).iter().collect();
    order.sort_by(|&a, &b| m.ground().label(a).cmp(m.ground().label(b)));
    order.into_iter().find(|&e| m.is_circuit_mask(i.insert(e)))
}

pub fn is_a_complete(m: &Matroid, joint: &[String], a: usize) -> Result<bool> {
    Ok(complete_witness(m, joint, a)?.is_some())
}

/// A point assignment over PG(r-1, q) realizing the matroid, found by
/// backtracking on the simplification (basis fixed to unit points), or None.
/// Loops map to the zero vector; parallel elements share their
/// representative's point.
pub fn gfq_representable(
    m: &Matroid,
    q: u32,
) -> Result<Option<BTreeMap<String, Vec<u32>>>> {
    let r = m.rank_full();
    if r > 4 {
        return Err(MatroidError::SizeLimitExceeded { size: r, cap: 4 });
    }
    let field = GfField::new(q)?;
    let (si, map) = m.simplify();
    let k = si.n_elements();
    let max_points = if r == 0 {
        0
    } else {
        ((q.pow(r as u32) - 1) / (q - 1)) as usize
    };
    if r > 0 && k > max_points {
        return Ok(None);
    }
    if k > 15 {
        return Err(MatroidError::SizeLimitExceeded { size: k, cap: 15 });
    }

    // candidate points of PG(r-1, q)
    let mut points: Vec<Vec<u32>> = Vec::new();
    if r > 0 {
        let mut vec = vec![0u32; r];
        'odometer: loop {
            let mut i = 0;
            loop {
                if i == r {
                    break 'odometer;
                }
                vec[i] += 1;
                if vec[i] < q {
                    break;
                }
                vec[i] = 0;
                i += 1;
            }
            if let Some(j) = vec.iter().position(|&d| d != 0) {
                if vec[j] == 1 {
                    points.push(vec.clone());
                }
            }
        }
    }

    // order elements: a basis of si first, fixed to unit points
    let basis = si.greedy_basis();
    let mut order: Vec<usize> = basis.iter().collect();
    order.extend(si.full_mask().minus(basis).iter());
    let table = si.rank_table()?;

    let mut assignment: Vec<Vec<u32>> = Vec::new();
    if !assign_points(&si, &field, &table, &order, &points, basis.len(), &mut assignment) {
        return Ok(None);
    }

    let mut out: BTreeMap<String, Vec<u32>> = BTreeMap::new();
    for (pos, &e) in order.iter().enumerate() {
        out.insert(si.ground().label(e).to_string(), assignment[pos].clone());
    }
    for (del, rep) in &map.parallel {
        let v = out[rep].clone();
        out.insert(del.clone(), v);
    }
    for l in &map.loops {
        out.insert(l.clone(), vec![0; r]);
    }
    Ok(Some(out))
}

fn assign_points(
    si: &Matroid,
    field: &GfField,
    table: &[u8],
    order: &[usize],
    points: &[Vec<u32>],
    basis_len: usize,
    assignment: &mut Vec<Vec<u32>>,
) -> bool {
    let pos = assignment.len();
    if pos == order.len() {
        return true;
    }
    let r = si.rank_full();
    let candidates: Vec<Vec<u32>> = if pos < basis_len {
        // canonical: basis element i is the i-th unit point
        let mut unit = vec![0u32; r];
        unit[pos] = 1;
        vec![unit]
    } else {
        points.to_vec()
    };
    'cands: for cand in candidates {
        assignment.push(cand);
        // rank of every assigned subset containing the new element must match
        let prefix_mask: u64 = (1 << pos) - 1;
        let mut sub = prefix_mask;
        loop {
            let mut si_mask = Mask::singleton(order[pos]);
            let mut vecs: Vec<&[u32]> = vec![assignment[pos].as_slice()];
            for j in Mask(sub).iter() {
                si_mask = si_mask.insert(order[j]);
                vecs.push(assignment[j].as_slice());
            }
            if field.rank_of_columns(&vecs) != table[si_mask.0 as usize] as usize {
                assignment.pop();
                continue 'cands;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & prefix_mask;
        }
        if assign_points(si, field, table, order, points, basis_len, assignment) {
            return true;
        }
        assignment.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::iso::{is_isomorphic, DEFAULT_ISO_CAP};

    #[test]
    fn uniform_examples() {
        let u24 = uniform(2, 4).unwrap();
        for s in u24.full_mask().subsets_of_size(3) {
            assert_eq!(u24.rank_mask(s), 2);
        }
        let z = uniform(0, 3).unwrap();
        assert_eq!(z.loops_coloops().0.len(), 3);
        let t = t_parallel_pairs(3).unwrap();
        assert_eq!(t.n_elements(), 6);
        assert_eq!(t.rank_full(), 3);
        assert!(uniform(3, 2).is_err());
    }

    #[test]
    fn linear_examples() {
        let id3 = linear_from_rows(
            2,
            vec!["a".into(), "b".into(), "c".into()],
            &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        )
        .unwrap();
        assert_eq!(id3.rank_full(), 3);
        assert!(id3.is_independent_mask(id3.full_mask()));

        // all 7 nonzero vectors of GF(2)^3 form the Fano plane
        let fano = projective_geometry(3, 2).unwrap();
        assert_eq!(fano.n_elements(), 7);
        assert_eq!(fano.rank_full(), 3);

        // Vandermonde over GF(5) with s = 2 gives U_{2,5}
        let rows: Vec<Vec<u32>> = (0..2u32)
            .map(|j| (0..5u32).map(|a| a.pow(j) % 5).collect())
            .collect();
        let labels: Vec<String> = (0..5).map(|i| format!("c{i}")).collect();
        let vm = linear_from_rows(5, labels, &rows).unwrap();
        let u25 = uniform(2, 5).unwrap();
        assert!(is_isomorphic(&vm, &u25, DEFAULT_ISO_CAP).unwrap().is_some());
    }

    #[test]
    fn pg_examples() {
        let pg22 = projective_geometry(2, 2).unwrap();
        assert!(is_isomorphic(&pg22, &uniform(2, 3).unwrap(), DEFAULT_ISO_CAP)
            .unwrap()
            .is_some());
        assert_eq!(projective_geometry(3, 2).unwrap().n_elements(), 7);
        assert_eq!(projective_geometry(3, 3).unwrap().n_elements(), 13);
        // simple: no loops or parallels
        let (si, m) = projective_geometry(3, 3).unwrap().simplify();
        assert_eq!(si.n_elements(), 13);
        assert!(m.loops.is_empty());
    }

    #[test]
    fn graphic_and_clique_examples() {
        let k3 = graphic(&Graph::complete(3)).unwrap();
        assert!(is_isomorphic(&k3, &uniform(2, 3).unwrap(), DEFAULT_ISO_CAP)
            .unwrap()
            .is_some());

        let (m, frame) = clique(3).unwrap();
        assert!(is_b_clique(&m, &frame).unwrap());

        let loopg = Graph::new(
            vec!["v".into()],
            vec![("v".into(), "v".into(), "l".into())],
        )
        .unwrap();
        let lm = graphic(&loopg).unwrap();
        assert_eq!(lm.rank_full(), 0);
    }

    #[test]
    fn bicircular_examples() {
        let (b, frame) = bicircular_plus(&Graph::complete(3)).unwrap();
        assert_eq!(b.rank_full(), 3);
        assert!(is_b_clique(&b, &frame).unwrap());

        // two parallel edges on {u,v}: {e1,e2,u} is dependent, {e1,e2} is not
        let g = Graph::new(
            vec!["u".into(), "v".into()],
            vec![
                ("u".into(), "v".into(), "f1".into()),
                ("u".into(), "v".into(), "f2".into()),
            ],
        )
        .unwrap();
        let (b2, _) = bicircular_plus(&g).unwrap();
        assert_eq!(b2.rank(&["f1", "f2", "u"]).unwrap(), 2);
        assert_eq!(b2.rank(&["f1", "f2"]).unwrap(), 2);

        // a graph loop at v is a nonloop element forming a circuit with v
        let g = Graph::new(
            vec!["v".into()],
            vec![("v".into(), "v".into(), "l".into())],
        )
        .unwrap();
        let (b3, _) = bicircular_plus(&g).unwrap();
        assert_eq!(b3.rank(&["l"]).unwrap(), 1);
        assert!(b3.is_circuit_mask(b3.mask_of(&["l", "v"]).unwrap()));
    }

    #[test]
    fn framed_examples() {
        let u33 = uniform(3, 3).unwrap();
        let frame: Vec<String> = u33.ground().labels().to_vec();
        assert!(is_framed_by(&u33, &frame).unwrap());
        assert!(!is_b_clique(&u33, &frame).unwrap());

        // the Fano plane is NOT framed by a basis: the three lines through
        // basis pairs cover only 6 of its 7 points
        let fano = projective_geometry(3, 2).unwrap();
        let basis = fano.labels_of(fano.greedy_basis());
        assert!(!is_framed_by(&fano, &basis).unwrap());
        assert!(!is_b_clique(&fano, &basis).unwrap());

        // a genuinely framed binary example: a basis plus the pairwise sums
        let mut labels: Vec<String> = (0..3).map(|i| format!("b{i}")).collect();
        let mut cols: Vec<Vec<u32>> = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            labels.push(format!("s{i}{j}"));
            let mut v = vec![0u32; 3];
            v[i] = 1;
            v[j] = 1;
            cols.push(v);
        }
        let framed = linear_matroid(2, labels, cols).unwrap();
        let frame: Vec<String> = (0..3).map(|i| format!("b{i}")).collect();
        assert!(is_framed_by(&framed, &frame).unwrap());
        assert!(is_b_clique(&framed, &frame).unwrap());
    }

    #[test]
    fn a_complete_examples() {
        let pg = projective_geometry(4, 2).unwrap();
        let basis = pg.labels_of(pg.greedy_basis());
        assert!(is_a_complete(&pg, &basis, 4).unwrap());

        let (m, frame) = clique(3).unwrap();
        assert!(is_a_complete(&m, &frame, 2).unwrap());
        assert!(!is_a_complete(&m, &frame, 3).unwrap());
    }

    #[test]
    fn representability_examples() {
        let u24 = uniform(2, 4).unwrap();
        assert!(gfq_representable(&u24, 2).unwrap().is_none());
        let rep = gfq_representable(&u24, 3).unwrap().unwrap();
        assert_eq!(rep.len(), 4);

        let u13 = uniform(1, 3).unwrap();
        assert!(gfq_representable(&u13, 2).unwrap().is_some());

        // representation reproduces ranks exactly
        let fano = projective_geometry(3, 2).unwrap();
        let rep = gfq_representable(&fano, 2).unwrap().unwrap();
        let field = GfField::new(2).unwrap();
        for s in fano.full_mask().subsets_of_size(3) {
            let vecs: Vec<Vec<u32>> = s
                .iter()
                .map(|i| rep[fano.ground().label(i)].clone())
                .collect();
            let refs: Vec<&[u32]> = vecs.iter().map(|v| v.as_slice()).collect();
            assert_eq!(field.rank_of_columns(&refs), fano.rank_mask(s));
        }
        // and the Fano plane is not GF(3)-representable
        assert!(gfq_representable(&fano, 3).unwrap().is_none());
    }
}

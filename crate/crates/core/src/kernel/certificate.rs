//! Minor certificates: a contract set, a delete set and an element bijection
//! witnessing that M / C \ D is (a relabeling of) the target matroid. The
//! verifier re-derives everything by exhaustive rank comparison; it never
//! trusts the producer.

use crate::error::{MatroidError, Result};
use crate::kernel::Matroid;
use crate::mask::Mask;
use std::collections::BTreeMap;

/// Exhaustive certificate verification walks all subsets of the kept set;
/// keep that tractable.
pub const CERT_VERIFY_CAP: usize = 20;

#[derive(Clone, Debug)]
pub struct MinorCertificate {
    pub contract: Vec<String>,
    pub delete: Vec<String>,
    /// kept element of M -> element of the target
    pub image: BTreeMap<String, String>,
    pub target: Matroid,
    /// Whether contract is independent and delete coindependent in M.
    pub normalized: bool,
}

impl MinorCertificate {
    /// Build a certificate from masks and an index-level image map,
    /// computing the normalization flag.
    pub fn from_masks(
        m: &Matroid,
        contract: Mask,
        delete: Mask,
        image_idx: &BTreeMap<usize, usize>,
        target: Matroid,
    ) -> MinorCertificate {
        let g = m.ground();
        let image = image_idx
            .iter()
            .map(|(&i, &j)| (g.label(i).to_string(), target.ground().label(j).to_string()))
            .collect();
        let normalized = m.is_independent_mask(contract)
            && m.rank_mask(m.full_mask().minus(delete)) == m.rank_full();
        MinorCertificate {
            contract: m.labels_of(contract),
            delete: m.labels_of(delete),
            image,
            target,
            normalized,
        }
    }

    /// Verify against M: set hygiene, bijectivity, and rank preservation of
    /// every subset between M/C\D and the target.
    pub fn verify(&self, m: &Matroid) -> Result<()> {
        let contract = m.mask_of(&self.contract)?;
        let delete = m.mask_of(&self.delete)?;
        if !contract.is_disjoint(delete) {
            return Err(MatroidError::OverlappingSets);
        }
        let kept = m.full_mask().minus(contract).minus(delete);
        if kept.len() != self.image.len() || self.image.len() != self.target.n_elements() {
            return Err(MatroidError::PreconditionViolation(
                "image is not a bijection onto the target ground set".into(),
            ));
        }
        if kept.len() > CERT_VERIFY_CAP {
            return Err(MatroidError::SizeLimitExceeded {
                size: kept.len(),
                cap: CERT_VERIFY_CAP,
            });
        }
        // image must mention exactly the kept elements and hit every target
        // element exactly once
        let mut hit = Mask::EMPTY;
        let mut kept_to_target: Vec<(usize, usize)> = Vec::with_capacity(kept.len());
        for (from, to) in &self.image {
            let i = m.ground().index_of(from)?;
            if !kept.contains(i) {
                return Err(MatroidError::PreconditionViolation(format!(
                    "image defined on non-kept element {from}"
                )));
            }
            let j = self.target.ground().index_of(to)?;
            if hit.contains(j) {
                return Err(MatroidError::PreconditionViolation(format!(
                    "target element {to} hit twice"
                )));
            }
            hit = hit.insert(j);
            kept_to_target.push((i, j));
        }
        let rc = m.rank_mask(contract);
        for sub in kept.subsets() {
            let mut img = Mask::EMPTY;
            for &(i, j) in &kept_to_target {
                if sub.contains(i) {
                    img = img.insert(j);
                }
            }
            let lhs = m.rank_mask(sub.union(contract)) - rc;
            let rhs = self.target.rank_mask(img);
            if lhs != rhs {
                return Err(MatroidError::PreconditionViolation(format!(
                    "rank mismatch on {:?}: minor has {lhs}, target has {rhs}",
                    m.labels_of(sub)
                )));
            }
        }
        Ok(())
    }

    /// The kept elements of M, in ground order.
    pub fn kept(&self, m: &Matroid) -> Result<Vec<String>> {
        let contract = m.mask_of(&self.contract)?;
        let delete = m.mask_of(&self.delete)?;
        Ok(m.labels_of(m.full_mask().minus(contract).minus(delete)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn identity_certificate_verifies() {
        let m = constructions::uniform(2, 4).unwrap();
        let image: BTreeMap<usize, usize> = (0..4).map(|i| (i, i)).collect();
        let cert = MinorCertificate::from_masks(
            &m,
            Mask::EMPTY,
            Mask::EMPTY,
            &image,
            constructions::uniform(2, 4).unwrap(),
        );
        cert.verify(&m).unwrap();
        assert!(cert.normalized);
    }

    #[test]
    fn tampered_certificate_fails() {
        let fano = constructions::projective_geometry(3, 2).unwrap();
        // restriction to a line is U_{2,3}; swapping an image with an
        // off-line point must fail verification
        let l0 = fano.ground().label(0).to_string();
        let l1 = fano.ground().label(1).to_string();
        let line = fano.closure(&[l0.as_str(), l1.as_str()]).unwrap();
        let line_mask = fano.mask_of(&line).unwrap();
        let delete = fano.full_mask().minus(line_mask);
        let image: BTreeMap<usize, usize> =
            line_mask.iter().zip(0..3).collect();
        let good = MinorCertificate::from_masks(
            &fano,
            Mask::EMPTY,
            delete,
            &image,
            constructions::uniform(2, 3).unwrap(),
        );
        good.verify(&fano).unwrap();

        let mut bad = good.clone();
        let off_line = fano
            .ground()
            .labels()
            .iter()
            .find(|l| !line.contains(l))
            .unwrap()
            .clone();
        let (some_kept, tgt) = bad.image.iter().next().map(|(k, v)| (k.clone(), v.clone())).unwrap();
        bad.image.remove(&some_kept);
        bad.image.insert(off_line.clone(), tgt);
        bad.delete = fano
            .ground()
            .labels()
            .iter()
            .filter(|l| !bad.image.contains_key(*l))
            .cloned()
            .collect();
        assert!(bad.verify(&fano).is_err());
    }
}

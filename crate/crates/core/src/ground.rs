//! Ground sets: ordered, distinct string labels with index lookup.

use crate::error::{MatroidError, Result};
use crate::mask::{Mask, MAX_GROUND};
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct GroundSet {
    labels: Arc<Vec<String>>,
    index: Arc<HashMap<String, usize>>,
}

impl GroundSet {
    pub fn new<I, S>(labels: I) -> Result<GroundSet>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() > MAX_GROUND {
            return Err(MatroidError::GroundSetTooLarge(labels.len()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(MatroidError::LabelCollision(l.clone()));
            }
        }
        Ok(GroundSet { labels: Arc::new(labels), index: Arc::new(index) })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| MatroidError::UnknownElement(label.to_string()))
    }

    pub fn contains(&self, label: &str) -> bool {
        self.index.contains_key(label)
    }

    pub fn full_mask(&self) -> Mask {
        Mask::full(self.len())
    }

    /// Translate a list of labels into a mask; unknown labels are an error.
    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<Mask> {
        let mut m = Mask::EMPTY;
        for l in labels {
            m = m.insert(self.index_of(l.as_ref())?);
        }
        Ok(m)
    }

    pub fn labels_of(&self, mask: Mask) -> Vec<String> {
        mask.iter().map(|i| self.labels[i].clone()).collect()
    }

    /// True when the two ground sets carry the same labels in the same order.
    pub fn same_as(&self, other: &GroundSet) -> bool {
        self.labels == other.labels || *self.labels == *other.labels
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicate_labels() {
        assert!(GroundSet::new(["a", "b", "a"]).is_err());
    }

    #[test]
    fn mask_round_trip() {
        let g = GroundSet::new(["a", "b", "c"]).unwrap();
        let m = g.mask_of(&["c", "a"]).unwrap();
        assert_eq!(g.labels_of(m), vec!["a".to_string(), "c".to_string()]);
        assert!(g.mask_of(&["z"]).is_err());
    }
}

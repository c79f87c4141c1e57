use std::sync::Arc;

use crate::error::{Error, Result};
use crate::omega_complex::{FacePoset, FaceSet, FaceSpec};

/// The corner complex at a vertex `a`: one face per ambient face of dim >= 1
/// whose initial vertex is `a`, one dimension lower, with the ambient
/// boundaries restricted to corner faces.
#[derive(Debug, Clone)]
pub struct CornerCategory {
    pub vertex: usize,
    pub poset: Arc<FacePoset>,
    ambient_ids: Vec<usize>,
    local: Vec<Option<usize>>,
}

impl CornerCategory {
    pub fn ambient_id(&self, local: usize) -> usize {
        self.ambient_ids[local]
    }

    pub fn local_id(&self, ambient: usize) -> Option<usize> {
        self.local[ambient]
    }

    pub fn is_empty(&self) -> bool {
        self.ambient_ids.is_empty()
    }

    /// `h^-`: the corner part of an ambient face set, in local ids.
    pub fn germ(&self, x: &FaceSet) -> FaceSet {
        FaceSet::from_ids(self.poset.len(), x.ids().filter_map(|a| self.local[a]))
    }
}

fn build(poset: &FacePoset, vertex: usize, initial: &[Option<usize>]) -> Result<CornerCategory> {
    if poset.dim(vertex) != 0 {
        return Err(Error::input(format!("{} is not a vertex", poset.label(vertex))));
    }
    let ambient_ids: Vec<usize> =
        (0..poset.len()).filter(|&f| poset.dim(f) >= 1 && initial[f] == Some(vertex)).collect();
    let mut local = vec![None; poset.len()];
    for (i, &a) in ambient_ids.iter().enumerate() {
        local[a] = Some(i);
    }
    let restrict = |fs: &[usize]| {
        fs.iter().filter(|&&b| local[b].is_some()).map(|&b| poset.label(b).clone()).collect()
    };
    let specs = ambient_ids
        .iter()
        .map(|&a| FaceSpec {
            label: poset.label(a).clone(),
            dim: poset.dim(a) - 1,
            bminus: restrict(poset.bminus(a)),
            bplus: restrict(poset.bplus(a)),
        })
        .collect();
    let sub = FacePoset::new(specs).map_err(|e| {
        Error::Inadmissible(format!("corner at {} is not a complex: {e}", poset.label(vertex)))
    })?;
    let cc = CornerCategory { vertex, poset: Arc::new(sub), ambient_ids, local };
    // The corner closure must be the restriction of the ambient closure.
    for (i, &a) in cc.ambient_ids.iter().enumerate() {
        if cc.germ(poset.sub(a)) != *cc.poset.sub(i) {
            return Err(Error::Inadmissible(format!(
                "corner faces of {} are not generated by its corner boundary",
                poset.label(a)
            )));
        }
    }
    Ok(cc)
}

fn initial_vertices(poset: &FacePoset) -> Vec<Option<usize>> {
    (0..poset.len()).map(|f| poset.initial_vertex(f)).collect()
}

pub fn corner_category(poset: &FacePoset, vertex: usize) -> Result<CornerCategory> {
    build(poset, vertex, &initial_vertices(poset))
}

/// One corner category per vertex, in vertex order; final vertices give empty summands.
pub fn corner_components(poset: &FacePoset) -> Result<Vec<CornerCategory>> {
    let init = initial_vertices(poset);
    poset.faces_of_dim(0).map(|v| build(poset, v, &init)).collect()
}

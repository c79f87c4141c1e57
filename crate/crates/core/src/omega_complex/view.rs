use std::sync::Arc;

use super::category::OmegaCategory;
use crate::error::{Error, Result};

/// The path category `P C`: morphisms of dim >= 1 with every index shifted down by one.
#[derive(Clone)]
pub struct PathView {
    base: Arc<dyn OmegaCategory>,
    map: Vec<usize>,
    back: Vec<Option<usize>>,
}

impl PathView {
    pub fn new(base: Arc<dyn OmegaCategory>) -> Result<PathView> {
        if !base.is_non_contracting() {
            return Err(Error::input("path category requires a non-contracting category"));
        }
        let map: Vec<usize> = (0..base.size()).filter(|&x| base.dim(x) >= 1).collect();
        let mut back = vec![None; base.size()];
        for (i, &x) in map.iter().enumerate() {
            back[x] = Some(i);
        }
        Ok(PathView { base, map, back })
    }

    pub fn base(&self) -> &Arc<dyn OmegaCategory> {
        &self.base
    }

    pub fn to_base(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn from_base(&self, y: usize) -> Option<usize> {
        self.back[y]
    }
}

impl OmegaCategory for PathView {
    fn size(&self) -> usize {
        self.map.len()
    }

    fn dim(&self, x: usize) -> usize {
        self.base.dim(self.map[x]) - 1
    }

    fn source(&self, x: usize, n: usize) -> usize {
        self.back[self.base.source(self.map[x], n + 1)].expect("non-contracting")
    }

    fn target(&self, x: usize, n: usize) -> usize {
        self.back[self.base.target(self.map[x], n + 1)].expect("non-contracting")
    }

    fn compose(&self, x: usize, y: usize, n: usize) -> Option<usize> {
        self.base.compose(self.map[x], self.map[y], n + 1).and_then(|z| self.back[z])
    }

    fn label(&self, x: usize) -> String {
        self.base.label(self.map[x])
    }
}

/// The total dual: every source becomes a target and composites reverse.
#[derive(Clone)]
pub struct DualView {
    base: Arc<dyn OmegaCategory>,
}

impl DualView {
    pub fn new(base: Arc<dyn OmegaCategory>) -> DualView {
        DualView { base }
    }

    pub fn base(&self) -> &Arc<dyn OmegaCategory> {
        &self.base
    }
}

impl OmegaCategory for DualView {
    fn size(&self) -> usize {
        self.base.size()
    }

    fn dim(&self, x: usize) -> usize {
        self.base.dim(x)
    }

    fn source(&self, x: usize, n: usize) -> usize {
        self.base.target(x, n)
    }

    fn target(&self, x: usize, n: usize) -> usize {
        self.base.source(x, n)
    }

    fn compose(&self, x: usize, y: usize, n: usize) -> Option<usize> {
        self.base.compose(y, x, n)
    }

    fn label(&self, x: usize) -> String {
        self.base.label(x)
    }
}

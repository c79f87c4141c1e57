use std::collections::HashMap;
use std::sync::Arc;

use crate::corner::{corner_components, germ_classes, germ_quotient};
use crate::error::{Error, Result};
use crate::omega_complex::{
    Category, DualView, OmegaCategory, TableCategory, DEFAULT_ELEMENT_CAP,
};

/// A finite non-contracting category, with its generating complex when it has one.
#[derive(Clone)]
pub struct Model {
    pub cat: Arc<dyn OmegaCategory>,
    pub complex: Option<Arc<Category>>,
    pub element_cap: usize,
}

/// The germ category `P^-_a C` at one base object, with `h^-` from `C`.
#[derive(Clone)]
pub struct GermComponent {
    pub vertex: usize,
    pub cat: Arc<dyn OmegaCategory>,
    pub h_minus: HashMap<usize, usize>,
}

impl Model {
    pub fn complex(c: Category) -> Model {
        let c = Arc::new(c);
        Model { cat: c.clone(), complex: Some(c), element_cap: DEFAULT_ELEMENT_CAP }
    }

    pub fn table(t: Arc<dyn OmegaCategory>) -> Model {
        Model { cat: t, complex: None, element_cap: DEFAULT_ELEMENT_CAP }
    }

    pub fn with_element_cap(mut self, cap: usize) -> Model {
        self.element_cap = cap;
        self
    }

    /// The total dual; complexes are dualized at the level of faces.
    pub fn dual(&self) -> Result<Model> {
        match &self.complex {
            Some(c) => {
                let d = Category::enumerate(Arc::new(c.poset().dual()), self.element_cap)?;
                Ok(Model::complex(d).with_element_cap(self.element_cap))
            }
            None => Ok(Model {
                cat: Arc::new(DualView::new(self.cat.clone())),
                complex: None,
                element_cap: self.element_cap,
            }),
        }
    }

    pub fn objects(&self) -> Vec<usize> {
        self.cat.of_dim(0)
    }

    pub fn check_non_contracting(&self) -> Result<()> {
        if self.cat.is_non_contracting() {
            Ok(())
        } else {
            Err(Error::input("category is contracting"))
        }
    }

    /// One germ category per object, in object order.
    pub fn germ_components(&self) -> Result<Vec<GermComponent>> {
        self.check_non_contracting()?;
        match &self.complex {
            Some(c) => {
                let poset = c.poset();
                let mut out = Vec::new();
                for cc in corner_components(poset)? {
                    let vertex = c.atom(cc.vertex);
                    let local = Category::enumerate(cc.poset.clone(), self.element_cap)?;
                    let mut h = HashMap::new();
                    for x in 0..c.size() {
                        if c.dim(x) >= 1 && c.source(x, 0) == vertex {
                            let g = cc.germ(c.element(x));
                            let k = local.index_of(&g).ok_or_else(|| {
                                Error::internal(format!("germ of {} is not a corner element", c.label(x)))
                            })?;
                            h.insert(x, k);
                        }
                    }
                    out.push(GermComponent { vertex, cat: Arc::new(local), h_minus: h });
                }
                Ok(out)
            }
            None => {
                let mut out = Vec::new();
                for vertex in self.objects() {
                    let g = germ_classes(self.cat.as_ref(), vertex)?;
                    let t: TableCategory = germ_quotient(self.cat.as_ref(), &g)?.ok_or_else(|| {
                        Error::Inadmissible(format!(
                            "germs at {} are not closed under composition",
                            self.cat.label(vertex)
                        ))
                    })?;
                    out.push(GermComponent { vertex, cat: Arc::new(t), h_minus: g.class_of });
                }
                Ok(out)
            }
        }
    }
}

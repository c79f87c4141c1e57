use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::omega_complex::Sign;

#[derive(Debug, Clone, PartialEq, Eq)]
struct Cell {
    dim: usize,
    /// `faces[i-1][0]` is `d_i^-`, `faces[i-1][1]` is `d_i^+`, by target name.
    faces: Vec<[Option<String>; 2]>,
}

/// Graded cells with named face maps `d_i^a`, `1 <= i <= dim`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PrecubicalSet {
    cells: BTreeMap<String, Cell>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Admissibility {
    pub finite: bool,
    pub acyclic_1_skeleton: bool,
    pub injective_attachment: bool,
}

impl Admissibility {
    pub fn all(&self) -> bool {
        self.finite && self.acyclic_1_skeleton && self.injective_attachment
    }

    pub fn first_failure(&self) -> Option<&'static str> {
        if !self.finite {
            Some("finite")
        } else if !self.acyclic_1_skeleton {
            Some("acyclic-1-skeleton")
        } else if !self.injective_attachment {
            Some("injective-cell-attachment")
        } else {
            None
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub cell_counts: Vec<usize>,
    pub missing_faces: Vec<String>,
    pub dangling: Vec<String>,
    pub dimension_errors: Vec<String>,
    pub relation_violations: Vec<String>,
    pub admissibility: Admissibility,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.missing_faces.is_empty()
            && self.dangling.is_empty()
            && self.dimension_errors.is_empty()
            && self.relation_violations.is_empty()
    }

    pub fn is_admissible(&self) -> bool {
        self.is_valid() && self.admissibility.all()
    }
}

fn sidx(s: Sign) -> usize {
    match s {
        Sign::Minus => 0,
        Sign::Plus => 1,
    }
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '+' | '-'))
}

impl PrecubicalSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_cell(&mut self, name: &str, dim: usize) -> Result<()> {
        if !valid_name(name) {
            return Err(Error::input(format!("invalid cell name {name:?}")));
        }
        if self.cells.contains_key(name) {
            return Err(Error::input(format!("duplicate cell {name}")));
        }
        self.cells.insert(name.to_string(), Cell { dim, faces: vec![[None, None]; dim] });
        Ok(())
    }

    pub fn set_face(&mut self, name: &str, i: usize, s: Sign, target: &str) -> Result<()> {
        let c = self
            .cells
            .get_mut(name)
            .ok_or_else(|| Error::input(format!("unknown cell {name}")))?;
        if i == 0 || i > c.dim {
            return Err(Error::input(format!("face index {i} out of range for {name} of dim {}", c.dim)));
        }
        let slot = &mut c.faces[i - 1][sidx(s)];
        if slot.is_some() {
            return Err(Error::input(format!("face {i}{s} of {name} given twice")));
        }
        *slot = Some(target.to_string());
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.cells.contains_key(name)
    }

    pub fn dim(&self, name: &str) -> Option<usize> {
        self.cells.get(name).map(|c| c.dim)
    }

    pub fn max_dim(&self) -> usize {
        self.cells.values().map(|c| c.dim).max().unwrap_or(0)
    }

    /// Cell names ordered by (dim, name).
    pub fn names(&self) -> Vec<&str> {
        let mut v: Vec<(&usize, &str)> = self.cells.iter().map(|(n, c)| (&c.dim, n.as_str())).collect();
        v.sort();
        v.into_iter().map(|(_, n)| n).collect()
    }

    pub fn cells_of_dim(&self, d: usize) -> Vec<&str> {
        self.cells.iter().filter(|(_, c)| c.dim == d).map(|(n, _)| n.as_str()).collect()
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        let mut v = vec![0; self.max_dim() + 1];
        for c in self.cells.values() {
            v[c.dim] += 1;
        }
        if self.cells.is_empty() {
            v.clear();
        }
        v
    }

    /// `d_i^s c`, when present.
    pub fn face(&self, name: &str, i: usize, s: Sign) -> Option<&str> {
        let c = self.cells.get(name)?;
        c.faces.get(i.checked_sub(1)?)?[sidx(s)].as_deref()
    }

    /// Renames every cell through `f` (which must be injective).
    pub fn rename(&self, f: impl Fn(&str) -> String) -> PrecubicalSet {
        let cells = self
            .cells
            .iter()
            .map(|(n, c)| {
                let faces = c
                    .faces
                    .iter()
                    .map(|[a, b]| [a.as_deref().map(&f), b.as_deref().map(&f)])
                    .collect();
                (f(n), Cell { dim: c.dim, faces })
            })
            .collect();
        PrecubicalSet { cells }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut missing = Vec::new();
        let mut dangling = Vec::new();
        let mut dimension_errors = Vec::new();
        for (name, c) in &self.cells {
            for i in 1..=c.dim {
                for s in Sign::both() {
                    match &c.faces[i - 1][sidx(s)] {
                        None => missing.push(format!("{name}: d_{i}^{s}")),
                        Some(t) => match self.cells.get(t) {
                            None => dangling.push(format!("{name}: d_{i}^{s} -> {t}")),
                            Some(tc) if tc.dim + 1 != c.dim => dimension_errors.push(format!(
                                "{name}: d_{i}^{s} -> {t} has dim {}, expected {}",
                                tc.dim,
                                c.dim - 1
                            )),
                            _ => {}
                        },
                    }
                }
            }
        }
        let structural_ok = missing.is_empty() && dangling.is_empty() && dimension_errors.is_empty();
        let mut relation_violations = Vec::new();
        if structural_ok {
            // d_i^a d_j^b = d_{j-1}^b d_i^a for i < j
            for (name, c) in &self.cells {
                for j in 2..=c.dim {
                    for i in 1..j {
                        for a in Sign::both() {
                            for b in Sign::both() {
                                let lhs = self.face(self.face(name, j, b).unwrap(), i, a).unwrap();
                                let rhs = self.face(self.face(name, i, a).unwrap(), j - 1, b).unwrap();
                                if lhs != rhs {
                                    relation_violations.push(format!(
                                        "{name}: d_{i}^{a} d_{j}^{b} = {lhs} but d_{}^{b} d_{i}^{a} = {rhs}",
                                        j - 1
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        let admissibility = if structural_ok && relation_violations.is_empty() {
            Admissibility {
                finite: true,
                acyclic_1_skeleton: self.acyclic_1_skeleton(),
                injective_attachment: self.injective_attachment(),
            }
        } else {
            Admissibility { finite: true, acyclic_1_skeleton: false, injective_attachment: false }
        };
        ValidationReport {
            cell_counts: self.cell_counts(),
            missing_faces: missing,
            dangling,
            dimension_errors,
            relation_violations,
            admissibility,
        }
    }

    fn acyclic_1_skeleton(&self) -> bool {
        let mut succ: HashMap<&str, Vec<&str>> = HashMap::new();
        for e in self.cells_of_dim(1) {
            let (a, b) = (self.face(e, 1, Sign::Minus).unwrap(), self.face(e, 1, Sign::Plus).unwrap());
            succ.entry(a).or_default().push(b);
        }
        // 0 = unseen, 1 = on stack, 2 = done
        let mut state: HashMap<&str, u8> = HashMap::new();
        for start in self.cells_of_dim(0) {
            if state.get(start).copied().unwrap_or(0) != 0 {
                continue;
            }
            let mut stack: Vec<(&str, usize)> = vec![(start, 0)];
            state.insert(start, 1);
            while let Some(&mut (v, ref mut k)) = stack.last_mut() {
                let next = succ.get(v).and_then(|s| s.get(*k)).copied();
                *k += 1;
                match next {
                    Some(w) => match state.get(w).copied().unwrap_or(0) {
                        0 => {
                            state.insert(w, 1);
                            stack.push((w, 0));
                        }
                        1 => return false,
                        _ => {}
                    },
                    None => {
                        state.insert(v, 2);
                        stack.pop();
                    }
                }
            }
        }
        true
    }

    fn injective_attachment(&self) -> bool {
        self.cells.iter().all(|(name, c)| {
            let faces = super::realize::all_cell_faces(self, name, c.dim);
            let mut seen: Vec<&str> = faces.iter().map(|s| s.as_str()).collect();
            seen.sort_unstable();
            seen.windows(2).all(|w| w[0] != w[1])
        })
    }
}

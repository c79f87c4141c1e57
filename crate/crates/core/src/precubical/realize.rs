use super::set::PrecubicalSet;
use crate::error::{Error, Result};
use crate::omega_complex::{cube_face_letter, FaceLabel, FacePoset, FaceSpec, Letter, Sign};

fn letter_sign(l: Letter) -> Option<Sign> {
    match l {
        Letter::Minus => Some(Sign::Minus),
        Letter::Plus => Some(Sign::Plus),
        Letter::Zero => None,
    }
}

/// The cell reached from `name` along a cube word of its dimension:
/// the last non-zero letter is applied first, then the word shrinks.
pub fn cell_face<'a>(k: &'a PrecubicalSet, name: &'a str, word: &[Letter]) -> Option<&'a str> {
    let mut cur = name;
    let mut w = word.to_vec();
    if k.dim(name)? != w.len() {
        return None;
    }
    while let Some(pos) = w.iter().rposition(|&l| l != Letter::Zero) {
        cur = k.face(cur, pos + 1, letter_sign(w[pos]).unwrap())?;
        w.remove(pos);
    }
    Some(cur)
}

pub(crate) fn all_cell_faces(k: &PrecubicalSet, name: &str, dim: usize) -> Vec<String> {
    let mut words: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..dim {
        words = words
            .into_iter()
            .flat_map(|w| {
                [Letter::Minus, Letter::Zero, Letter::Plus].map(|l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    words
        .iter()
        .filter_map(|w| cell_face(k, name, w).map(str::to_string))
        .collect()
}

/// One atom per cell; `bminus(c) = {d_i^{a_i} c}` with `a_i = -` for odd `i`
/// and `+` for even `i`, and dually for `bplus`, as in the standard cube.
pub fn realize(k: &PrecubicalSet) -> Result<FacePoset> {
    let report = k.validate();
    if !report.is_valid() {
        let mut issues = report.missing_faces.clone();
        issues.extend(report.dangling.iter().cloned());
        issues.extend(report.dimension_errors.iter().cloned());
        issues.extend(report.relation_violations.iter().cloned());
        return Err(Error::input(format!("invalid precubical set: {}", issues.join("; "))));
    }
    if let Some(flag) = report.admissibility.first_failure() {
        return Err(Error::Inadmissible(flag.to_string()));
    }
    let specs = k
        .names()
        .into_iter()
        .map(|name| {
            let dim = k.dim(name).unwrap();
            let side = |s: Sign| -> Vec<FaceLabel> {
                (1..=dim)
                    .map(|i| {
                        let a = letter_sign(cube_face_letter(i, s)).unwrap();
                        FaceLabel::Cell(k.face(name, i, a).unwrap().to_string())
                    })
                    .collect()
            };
            FaceSpec {
                label: FaceLabel::Cell(name.to_string()),
                dim,
                bminus: side(Sign::Minus),
                bplus: side(Sign::Plus),
            }
        })
        .collect();
    FacePoset::new(specs)
}

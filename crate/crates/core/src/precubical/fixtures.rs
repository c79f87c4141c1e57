use std::collections::BTreeSet;

use super::set::PrecubicalSet;
use crate::omega_complex::{word_from_str, word_to_string, Letter, Sign};

fn zero_positions(w: &[Letter]) -> Vec<usize> {
    w.iter().enumerate().filter(|(_, &l)| l == Letter::Zero).map(|(p, _)| p).collect()
}

/// `d_i^a w`: the i-th zero of the word replaced by `a`.
fn word_face(w: &[Letter], i: usize, s: Sign) -> Vec<Letter> {
    let mut v = w.to_vec();
    v[zero_positions(w)[i - 1]] = Letter::of_sign(s);
    v
}

fn cube_cells(n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w: Vec<Letter>| {
                [Letter::Minus, Letter::Zero, Letter::Plus].map(|l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

fn from_words(words: &[Vec<Letter>]) -> PrecubicalSet {
    let mut k = PrecubicalSet::new();
    for w in words {
        k.add_cell(&cell_name(w), zero_positions(w).len()).expect("cube words are valid names");
    }
    for w in words {
        for i in 1..=zero_positions(w).len() {
            for s in Sign::both() {
                k.set_face(&cell_name(w), i, s, &cell_name(&word_face(w, i, s))).unwrap();
            }
        }
    }
    k
}

fn cell_name(w: &[Letter]) -> String {
    if w.is_empty() {
        "pt".to_string()
    } else {
        word_to_string(w)
    }
}

/// The standard n-cube; cells are named by their cube words (`pt` for n = 0).
pub fn standard_cube(n: usize) -> PrecubicalSet {
    from_words(&cube_cells(n))
}

/// The standard n-cube without its top cell.
pub fn boundary_cube(n: usize) -> PrecubicalSet {
    let words: Vec<Vec<Letter>> =
        cube_cells(n).into_iter().filter(|w| zero_positions(w).len() < n).collect();
    from_words(&words)
}

/// The closure of the given cells inside `standard_cube(n)`.
pub fn subcomplex(n: usize, tops: &[&str]) -> PrecubicalSet {
    let mut keep: BTreeSet<Vec<Letter>> = BTreeSet::new();
    let mut stack: Vec<Vec<Letter>> =
        tops.iter().map(|t| word_from_str(t).expect("cube word")).collect();
    while let Some(w) = stack.pop() {
        assert_eq!(w.len(), n, "cell {} is not in the {n}-cube", word_to_string(&w));
        if keep.insert(w.clone()) {
            for i in 1..=zero_positions(&w).len() {
                for s in Sign::both() {
                    stack.push(word_face(&w, i, s));
                }
            }
        }
    }
    from_words(&keep.into_iter().collect::<Vec<_>>())
}

/// The two squares `-00` and `00-` of the 3-cube with their faces.
pub fn fork_complex() -> PrecubicalSet {
    subcomplex(3, &["-00", "00-"])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_counts() {
        assert_eq!(standard_cube(2).cell_counts(), vec![4, 4, 1]);
        assert_eq!(standard_cube(3).cell_counts(), vec![8, 12, 6, 1]);
        assert_eq!(boundary_cube(2).cell_counts(), vec![4, 4]);
        assert_eq!(standard_cube(0).cell_counts(), vec![1]);
    }

    #[test]
    fn fork_census() {
        let k = fork_complex();
        assert_eq!(k.cell_counts(), vec![6, 7, 2]);
        assert_eq!(k.cells_of_dim(2), vec!["-00", "00-"]);
        let mut e = k.cells_of_dim(1);
        e.sort();
        let mut want = vec!["0--", "-0-", "--0", "0+-", "-+0", "+0-", "-0+"];
        want.sort();
        assert_eq!(e, want);
    }
}

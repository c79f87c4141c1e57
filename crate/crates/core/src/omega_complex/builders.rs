use super::face::{FaceLabel, Letter, Sign};
use super::poset::{cube_face_letter, FacePoset, FaceSpec};

fn all_words(n: usize) -> Vec<Vec<Letter>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|w| {
                [Letter::Minus, Letter::Zero, Letter::Plus].into_iter().map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

/// Faces of a cube word on one side: the i-th zero replaced by the
/// sign-alternating letter.
pub fn cube_word_faces(w: &[Letter], s: Sign) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    let mut count = 0;
    for (pos, &l) in w.iter().enumerate() {
        if l == Letter::Zero {
            count += 1;
            let mut v = w.to_vec();
            v[pos] = cube_face_letter(count, s);
            out.push(v);
        }
    }
    out
}

/// Faces of a simplex on one side: `Minus` drops an odd-position vertex,
/// `Plus` an even-position one (positions 1-based).
pub fn simplex_faces(v: &[usize], s: Sign) -> Vec<Vec<usize>> {
    if v.len() < 2 {
        return Vec::new();
    }
    let want_odd = s == Sign::Minus;
    (0..v.len())
        .filter(|k| ((k + 1) % 2 == 1) == want_odd)
        .map(|k| {
            let mut f = v.to_vec();
            f.remove(k);
            f
        })
        .collect()
}

/// The n-cube `I^n`: all words of length n over `{-,0,+}`.
pub fn cube(n: usize) -> FacePoset {
    let specs = all_words(n)
        .into_iter()
        .map(|w| FaceSpec {
            dim: w.iter().filter(|&&l| l == Letter::Zero).count(),
            bminus: cube_word_faces(&w, Sign::Minus).into_iter().map(FaceLabel::Cube).collect(),
            bplus: cube_word_faces(&w, Sign::Plus).into_iter().map(FaceLabel::Cube).collect(),
            label: FaceLabel::Cube(w),
        })
        .collect();
    FacePoset::new(specs).expect("cube poset is well formed")
}

/// The n-simplex `Delta^n`: nonempty increasing sequences in `{0..n}`.
pub fn simplex(n: usize) -> FacePoset {
    let mut specs = Vec::new();
    for mask in 1u64..(1u64 << (n + 1)) {
        let v: Vec<usize> = (0..=n).filter(|&i| mask >> i & 1 == 1).collect();
        specs.push(FaceSpec {
            dim: v.len() - 1,
            bminus: simplex_faces(&v, Sign::Minus).into_iter().map(FaceLabel::Simplex).collect(),
            bplus: simplex_faces(&v, Sign::Plus).into_iter().map(FaceLabel::Simplex).collect(),
            label: FaceLabel::Simplex(v),
        });
    }
    FacePoset::new(specs).expect("simplex poset is well formed")
}

pub fn globe_source_name(j: usize) -> String {
    format!("s{j}")
}

pub fn globe_target_name(j: usize) -> String {
    format!("t{j}")
}

pub const GLOBE_TOP: &str = "u";

/// The d-globe: one top cell `u` and two cells `s_j`, `t_j` per lower dimension.
pub fn globe(d: usize) -> FacePoset {
    let cell = |s: String| FaceLabel::Cell(s);
    let lower = |j: usize| -> (Vec<FaceLabel>, Vec<FaceLabel>) {
        if j == 0 {
            (vec![], vec![])
        } else {
            (vec![cell(globe_source_name(j - 1))], vec![cell(globe_target_name(j - 1))])
        }
    };
    let mut specs = Vec::new();
    for j in 0..d {
        let (bm, bp) = lower(j);
        for name in [globe_source_name(j), globe_target_name(j)] {
            specs.push(FaceSpec { label: cell(name), dim: j, bminus: bm.clone(), bplus: bp.clone() });
        }
    }
    let (bm, bp) = lower(d);
    specs.push(FaceSpec { label: cell(GLOBE_TOP.into()), dim: d, bminus: bm, bplus: bp });
    FacePoset::new(specs).expect("globe poset is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_counts() {
        for n in 0..=6 {
            assert_eq!(cube(n).len(), 3usize.pow(n as u32));
            assert_eq!(simplex(n).len(), (1 << (n + 1)) - 1);
        }
        assert_eq!(globe(3).len(), 7);
    }

    #[test]
    fn closure_of_top_square_is_everything() {
        let c = cube(2);
        let r = c.closure_of_labels(&["00"]).unwrap();
        assert_eq!(r.len(), 9);
        let s = simplex(2);
        let r = s.closure_of_labels(&["(02)"]).unwrap();
        assert_eq!(s.label_strings(&r), vec!["(0)", "(02)", "(2)"]);
    }

    #[test]
    fn cube_dual_is_cube() {
        let c = cube(3);
        let d = c.dual();
        assert_eq!(c.specs(), d.specs());
    }
}

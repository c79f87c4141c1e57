use std::path::PathBuf;

use hda_core::corner::phi_minus;
use hda_core::omega_complex::{cube, simplex, Category, FacePoset, OmegaCategory, Sign};
use hda_core::precubical::{boundary_cube, fork_complex, parse, print, standard_cube};

fn labels(p: &FacePoset, ids: &[usize]) -> Vec<String> {
    let mut v: Vec<String> = ids.iter().map(|&i| p.label(i).to_string()).collect();
    v.sort();
    v
}

fn sorted(xs: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = xs.iter().map(|s| s.to_string()).collect();
    v.sort();
    v
}

#[test]
fn cube_face_boundaries() {
    let p = cube(4);
    let x = p.id("0+00").unwrap();
    assert_eq!(labels(&p, p.bfaces(x, Sign::Minus)), sorted(&["-+00", "0++0", "0+0-"]));
    assert_eq!(labels(&p, p.bfaces(x, Sign::Plus)), sorted(&["++00", "0+-0", "0+0+"]));
}

#[test]
fn simplex_face_boundaries() {
    let p = simplex(9);
    let x = p.id("(04589)").unwrap();
    // Odd positions removed for the source, even ones for the target.
    assert_eq!(labels(&p, p.bfaces(x, Sign::Minus)), sorted(&["(4589)", "(0489)", "(0458)"]));
    assert_eq!(labels(&p, p.bfaces(x, Sign::Plus)), sorted(&["(0589)", "(0459)"]));
}

#[test]
fn phi_two_table() {
    let table: [(&[usize], &str); 7] = [
        (&[0, 1, 2], "000"),
        (&[0, 1], "00-"),
        (&[0, 2], "0-0"),
        (&[1, 2], "-00"),
        (&[0], "0--"),
        (&[1], "-0-"),
        (&[2], "--0"),
    ];
    for (sigma, w) in table {
        assert_eq!(phi_minus(2, sigma), w, "{sigma:?}");
    }
}

#[test]
fn square_source_and_target() {
    let c = Category::of_poset(cube(2)).unwrap();
    let x = c.atom_by_label("00").unwrap();
    assert_eq!(c.label(c.source(x, 1)), "{--,-0,-+,0+,++}");
    assert_eq!(c.label(c.target(x, 1)), "{--,0-,+-,+0,++}");
    assert_eq!(c.label(c.source(x, 0)), "{--}");
    assert_eq!(c.label(c.target(x, 0)), "{++}");
}

fn corpus(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect()
}

#[test]
fn corpus_files_are_the_fixtures() {
    for (file, k) in [
        ("cube1.pcs", standard_cube(1)),
        ("cube2.pcs", standard_cube(2)),
        ("cube3.pcs", standard_cube(3)),
        ("fork.pcs", fork_complex()),
        ("square_boundary.pcs", boundary_cube(2)),
    ] {
        let text = std::fs::read_to_string(corpus(file)).unwrap();
        let parsed = parse(&text).unwrap();
        assert_eq!(parsed, k, "{file}");
        assert_eq!(print(&parsed), text, "{file}");
        let v = parsed.validate();
        assert!(v.is_valid() && v.is_admissible(), "{file}");
    }
}

#[test]
fn broken_square_is_rejected() {
    let k = parse(&std::fs::read_to_string(corpus("broken.pcs")).unwrap()).unwrap();
    let v = k.validate();
    assert!(!v.is_valid());
    assert_eq!(v.relation_violations.len(), 1);
    assert!(v.relation_violations[0].starts_with("sq:"), "{:?}", v.relation_violations);
}

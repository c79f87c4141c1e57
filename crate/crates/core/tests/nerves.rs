use std::sync::Arc;

use hda_core::corner::germ_oracle;
use hda_core::nerves::{
    branching_nerve, check_faces_and_ev_determine, comparison_to_semiglobular, enumerate_functors, find_filler,
    globular_nerve, kan_check, nerve, semi_globular_nerve, Cut, Horn, Model, NerveKind, NerveOptions, Shape, Simplex,
};
use hda_core::omega_complex::{cube, is_groupoid, Category, OmegaCategory, PathView, TableCategory};
use hda_core::precubical::{boundary_cube, fork_complex, realize, standard_cube};
use hda_core::PrecubicalSet;

const KINDS: [NerveKind; 5] = [
    NerveKind::Branching,
    NerveKind::Merging,
    NerveKind::Globular,
    NerveKind::SemiGlobularBranching,
    NerveKind::SemiGlobularMerging,
];

fn model(k: &PrecubicalSet) -> Model {
    Model::complex(Category::of_poset(realize(k).unwrap()).unwrap())
}

fn fixtures() -> Vec<(&'static str, PrecubicalSet)> {
    vec![
        ("cube1", standard_cube(1)),
        ("cube2", standard_cube(2)),
        ("cube3", standard_cube(3)),
        ("fork", fork_complex()),
        ("square boundary", boundary_cube(2)),
    ]
}

#[test]
fn simplicial_identities_on_fixtures() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for kind in KINDS {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let id = cut.set.check_identities();
            assert!(id.checked > 0 && id.passed(), "{name} {}: {:?}", kind.name(), id.failures);
            let ev = cut.check_ev_degeneracies();
            assert!(ev.passed(), "{name} {}: {:?}", kind.name(), ev.failures);
            if !kind.is_cubical() {
                let det = check_faces_and_ev_determine(&cut);
                assert!(det.passed(), "{name} {}: {:?}", kind.name(), det.failures);
            }
        }
    }
}

#[test]
fn cubical_simplices_are_not_determined_by_minus_faces() {
    let cut = branching_nerve(&model(&standard_cube(3)), NerveOptions::up_to(2)).unwrap();
    assert!(!check_faces_and_ev_determine(&cut).passed());
}

#[test]
fn branching_base_is_the_vertices() {
    let m = model(&standard_cube(1));
    let br = branching_nerve(&m, NerveOptions::up_to(1)).unwrap();
    let mut base = br.base_labels.clone();
    base.sort();
    assert_eq!(base, vec!["{+}", "{-}"]);
    // The globular base is pairs of vertices.
    let gl = globular_nerve(&m, NerveOptions::up_to(1)).unwrap();
    assert_eq!(gl.set.base, 4);
}

/// Functors I^1 -> I^1 by hand: a 0-cell goes to a vertex, the 1-cell to an
/// element from the image of `-` to the image of `+`.
#[test]
fn interval_endofunctors() {
    let c = Category::of_poset(cube(1)).unwrap();
    let shape = Shape::cube(1).unwrap();
    let found = enumerate_functors(&shape, &c, &vec![false; shape.len()], 1000).unwrap();
    let p = shape.poset();
    let (lo, hi, mid) = (p.id("-").unwrap(), p.id("+").unwrap(), p.id("0").unwrap());
    let mut oracle = 0;
    for a in 0..c.size() {
        for b in 0..c.size() {
            for e in 0..c.size() {
                let ok = c.dim(a) == 0
                    && c.dim(b) == 0
                    && match c.dim(e) {
                        0 => e == a && e == b,
                        _ => c.source(e, 0) == a && c.target(e, 0) == b,
                    };
                if ok {
                    oracle += 1;
                    let mut want = vec![0; 3];
                    want[lo] = a;
                    want[hi] = b;
                    want[mid] = e;
                    assert!(found.contains(&want), "{want:?} missing");
                }
            }
        }
    }
    assert_eq!(oracle, 3);
    assert_eq!(found.len(), oracle);
}

fn fork_horn(c: &Category, br: &Cut) -> (usize, usize) {
    let p = br.shapes[1].poset();
    let incl = |pre: &str, post: &str| {
        let a: Vec<usize> =
            (0..p.len()).map(|f| c.atom_by_label(&format!("{pre}{}{post}", p.label(f))).unwrap()).collect();
        br.index_of(1, &Simplex { component: 0, assignment: a }).unwrap()
    };
    (incl("-", ""), incl("", "-"))
}

#[test]
fn fork_branching_horn_and_its_globular_filler() {
    let c = Category::of_poset(realize(&fork_complex()).unwrap()).unwrap();
    let m = Model::complex(c.clone());
    let br = branching_nerve(&m, NerveOptions::up_to(2)).unwrap();
    let gl = semi_globular_nerve(&m, NerveOptions::up_to(2)).unwrap();
    let (y0, y2) = fork_horn(&c, &br);
    let horn = Horn { n: 2, k: 1, faces: vec![Some(y0), None, Some(y2)] };
    assert_eq!(find_filler(&br.set, &horn), None);
    // The horn is listed by the exhaustive search too.
    let rep = kan_check(&br.set, 2, 1_000_000);
    assert!(rep.conclusive);
    assert!(rep.unfillable.iter().any(|h| h.k == 1 && h.faces == horn.faces));

    let cmp = comparison_to_semiglobular(&br, &gl).unwrap();
    let r = cmp.check(&br, &gl);
    assert!(r.checked > 0 && r.passed(), "{:?}", r.failures);
    let image = Horn { n: 2, k: 1, faces: vec![Some(cmp.maps[1][y0]), None, Some(cmp.maps[1][y2])] };
    let f = find_filler(&gl.set, &image).expect("semi-globular filler");
    assert_eq!(gl.ev_cat(2, f).label(gl.ev[2][f]), "{--0,-0-,-00,0--,00-}");
}

#[test]
fn inner_horns_of_semi_globular_nerves_fill() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for kind in [NerveKind::SemiGlobularBranching, NerveKind::SemiGlobularMerging, NerveKind::Globular] {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let rep = kan_check(&cut.set, 2, 1_000_000);
            assert!(rep.conclusive);
            let inner: Vec<_> = rep.unfillable.iter().filter(|h| 0 < h.k && h.k < h.n).collect();
            assert!(inner.is_empty(), "{name} {}: {} inner horns unfilled", kind.name(), inner.len());
        }
    }
}

/// Degree-0 simplices of the semi-globular nerve at a vertex are the
/// 0-dimensional germs, counted here on the quotient category.
#[test]
fn semi_globular_degree_zero_counts_germs() {
    let c = Category::of_poset(realize(&fork_complex()).unwrap()).unwrap();
    let m = Model::complex(c.clone());
    let gl = semi_globular_nerve(&m, NerveOptions::up_to(1)).unwrap();
    for (k, comp) in gl.components.iter().enumerate() {
        let v = comp.vertex.unwrap();
        let o = germ_oracle(&c, c.poset().id(&c.label(v).trim_matches(['{', '}']).to_string()).unwrap(), 1000)
            .unwrap();
        let want = o.category.of_dim(0).len();
        let got = gl.simplices[0].iter().filter(|s| s.component == k).count();
        assert_eq!(got, want, "vertex {}", comp.label);
    }
    let at_initial = gl.components.iter().position(|comp| comp.label == "{---}").unwrap();
    assert_eq!(gl.simplices[0].iter().filter(|s| s.component == at_initial).count(), 3);
}

/// Two parallel 1-cells with mutually inverse 2-cells; `P C` is a groupoid.
fn groupoid_fixture() -> TableCategory {
    let labels = ["a", "b", "f", "g", "al", "be"].map(String::from).to_vec();
    let (a, b, f, g, al, be) = (0, 1, 2, 3, 4, 5);
    TableCategory::new(
        labels,
        vec![0, 0, 1, 1, 2, 2],
        vec![vec![], vec![], vec![a], vec![a], vec![a, f], vec![a, g]],
        vec![vec![], vec![], vec![b], vec![b], vec![b, g], vec![b, f]],
        vec![(al, be, 1, f), (be, al, 1, g)],
    )
    .unwrap()
}

#[test]
fn groupoid_nerves_are_kan() {
    let t: Arc<dyn OmegaCategory> = Arc::new(groupoid_fixture());
    let pv = PathView::new(t.clone()).unwrap();
    assert!(is_groupoid(&pv));
    let m = Model::table(t);
    for kind in [NerveKind::Globular, NerveKind::SemiGlobularBranching, NerveKind::SemiGlobularMerging] {
        let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
        assert!(cut.set.check_identities().passed());
        let rep = kan_check(&cut.set, 2, 1_000_000);
        assert!(rep.conclusive);
        assert_eq!(rep.unfillable_count, 0, "{}", kind.name());
    }
}

#[test]
fn functor_cap_is_reported() {
    let m = model(&standard_cube(3));
    let opts = NerveOptions { functor_cap: 5, ..NerveOptions::up_to(2) };
    assert!(branching_nerve(&m, opts).is_err());
}

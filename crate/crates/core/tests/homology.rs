use hda_core::homology::{
    cf_to_cr_map, chain_of_cut, check_comparison_square, check_folding, formal_complex, formal_complex_from,
    formal_kind_of, reduced_complex, ChainComplex, Folder, FormalKind,
};
use hda_core::nerves::{comparison_to_semiglobular, nerve, Model, NerveKind, NerveOptions};
use hda_core::omega_complex::{Category, OmegaCategory};
use hda_core::precubical::{boundary_cube, fork_complex, realize, standard_cube, subcomplex};
use hda_core::PrecubicalSet;

const KINDS: [NerveKind; 5] = [
    NerveKind::Branching,
    NerveKind::Merging,
    NerveKind::Globular,
    NerveKind::SemiGlobularBranching,
    NerveKind::SemiGlobularMerging,
];

const P: i128 = 1_000_000_007;

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

fn inv(a: i128) -> i128 {
    let (mut r, mut e, mut b) = (1, P - 2, a.rem_euclid(P));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

/// Rank over `F_p` of the span of sparse columns in dimension `rows`.
fn rank(rows: usize, cols: &[Vec<(usize, i64)>]) -> usize {
    let mut m: Vec<Vec<i128>> = cols
        .iter()
        .map(|c| {
            let mut v = vec![0; rows];
            for &(i, a) in c {
                v[i] = (v[i] + a as i128).rem_euclid(P);
            }
            v
        })
        .collect();
    let mut r = 0;
    for i in 0..rows {
        let Some(k) = (r..m.len()).find(|&k| m[k][i] != 0) else { continue };
        m.swap(r, k);
        let piv = inv(m[r][i]);
        for k in 0..m.len() {
            if k != r && m[k][i] != 0 {
                let f = m[k][i] * piv % P;
                for j in 0..rows {
                    m[k][j] = (m[k][j] - f * m[r][j]).rem_euclid(P);
                }
            }
        }
        r += 1;
    }
    r
}

/// Betti numbers of `Z^g / R` complexes by linear algebra mod a large prime.
fn betti_oracle(c: &ChainComplex, top: usize) -> Vec<usize> {
    let rel = |n: usize| rank(c.gens[n], &c.relations[n]);
    // Rank of D_n on the quotients.
    let image = |n: usize| -> usize {
        if n == 0 || n >= c.gens.len() {
            return 0;
        }
        let mut cols = c.diff[n].clone();
        cols.extend(c.relations[n - 1].iter().cloned());
        rank(c.gens[n - 1], &cols) - rel(n - 1)
    };
    (0..=top).map(|n| c.gens[n] - rel(n) - image(n) - image(n + 1)).collect()
}

#[test]
fn snf_betti_numbers_match_rank_oracle() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for kind in KINDS {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let cf = formal_complex(&m, formal_kind_of(kind), 2).unwrap();
            for c in [chain_of_cut(&cut), reduced_complex(&cut), cf.complex] {
                let top = c.exact_through.min(2);
                let h = c.homology(2).unwrap();
                assert_eq!(h.betti(), betti_oracle(&c, top), "{name} {}", c.name);
                assert!(h.degrees.iter().all(|d| d.torsion.is_empty()), "{name} {}: torsion", c.name);
            }
        }
    }
}

#[test]
fn boundaries_square_to_zero() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for kind in KINDS {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let cf = formal_complex(&m, formal_kind_of(kind), 2).unwrap();
            for c in [chain_of_cut(&cut), reduced_complex(&cut), cf.complex] {
                let r = c.check_boundaries();
                assert!(r.passed(), "{name} {}: {:?}", c.name, r.failures);
                assert!(r.checked > 0 || c.gens.iter().skip(2).all(|&g| g == 0), "{name} {}: nothing checked", c.name);
            }
        }
    }
}

/// A cube is contractible and has a single initial and final state.
#[test]
fn cubes_are_acyclic_in_every_theory() {
    for n in 1..=3 {
        let m = model(&standard_cube(n));
        for kind in [NerveKind::Branching, NerveKind::Merging, NerveKind::SemiGlobularBranching, NerveKind::SemiGlobularMerging]
        {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let cf = formal_complex(&m, formal_kind_of(kind), 2).unwrap();
            for c in [chain_of_cut(&cut), reduced_complex(&cut), cf.complex] {
                let h = c.homology(2).unwrap();
                let got: Vec<String> = h.degrees.iter().map(|d| d.render()).collect();
                assert_eq!(got, ["Z", "0", "0"], "I{n} {}", c.name);
            }
        }
    }
}

/// The globular base is pairs of states; degree 0 keeps the pairs with no path.
#[test]
fn globular_degree_zero_counts_unreachable_pairs() {
    for (name, k) in fixtures() {
        let c = Category::of_poset(realize(&k).unwrap()).unwrap();
        let m = Model::complex(c.clone());
        let v = c.poset().faces_of_dim(0).count();
        let mut reach = std::collections::BTreeSet::new();
        for x in c.poset().faces_of_dim(1) {
            let x = c.atom(x);
            reach.insert((c.source(x, 0), c.target(x, 0)));
        }
        // Transitive closure.
        loop {
            let add: Vec<_> = reach
                .iter()
                .flat_map(|&(a, b)| reach.iter().filter(move |&&(c2, _)| c2 == b).map(move |&(_, d)| (a, d)))
                .filter(|p| !reach.contains(p))
                .collect();
            if add.is_empty() {
                break;
            }
            reach.extend(add);
        }
        let cut = nerve(&m, NerveKind::Globular, NerveOptions::up_to(1)).unwrap();
        let h = chain_of_cut(&cut).homology(0).unwrap();
        assert_eq!(h.degrees[0].betti, v * v - reach.len(), "{name}");
    }
}

#[test]
fn fork_values() {
    let m = model(&fork_complex());
    let want = [
        (NerveKind::Branching, ["Z^2", "Z", "0"]),
        (NerveKind::Merging, ["Z", "0", "0"]),
        (NerveKind::SemiGlobularBranching, ["Z^2", "Z", "0"]),
        (NerveKind::SemiGlobularMerging, ["Z", "0", "0"]),
    ];
    for (kind, w) in want {
        let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
        let got: Vec<String> = chain_of_cut(&cut).homology(2).unwrap().degrees.iter().map(|d| d.render()).collect();
        assert_eq!(got, w, "{}", kind.name());
    }
}

/// Imposing `x *_0 y = x` only from degree 2 breaks the differential as soon
/// as a path runs into a square: here the edge `0--` into the square `+00`.
#[test]
fn branching_relation_must_start_in_degree_one() {
    for k in [subcomplex(3, &["0--", "+00"]), standard_cube(3)] {
        let m = model(&k);
        for kind in [FormalKind::Branching, FormalKind::Merging] {
            let ok = formal_complex_from(&m, kind, 2, 1).unwrap();
            assert!(ok.complex.check_boundaries().passed());
            let bad = formal_complex_from(&m, kind, 2, 2).unwrap();
            assert!(!bad.complex.check_boundaries().passed(), "{}", kind.name());
        }
        // The globular complex has no degree-0 composition relation to move.
        let gl = formal_complex_from(&m, FormalKind::Globular, 2, 2).unwrap();
        assert!(gl.complex.check_boundaries().passed());
    }
}

#[test]
fn folding_postconditions_and_formal_map() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for kind in KINDS {
            let cut = nerve(&m, kind, NerveOptions::up_to(2)).unwrap();
            let cr = reduced_complex(&cut);
            let f = Folder::new(&cut, 200_000).unwrap();
            let fold = check_folding(&f, &cr).unwrap();
            assert!(fold.checked() > 0 && fold.passed(), "{name} {}", kind.name());
            let cf = formal_complex(&m, formal_kind_of(kind), 2).unwrap();
            let ev = cf_to_cr_map(&cf, &f).unwrap().check(&cf.complex, &cr);
            assert!(ev.chain_map.passed() && ev.relations.passed(), "{name} {}", kind.name());
            assert!(ev.surjective(), "{name} {}", kind.name());
            assert!(ev.kernel_rank.iter().all(|&r| r == 0), "{name} {}", kind.name());
        }
    }
}

#[test]
fn comparison_squares_commute() {
    for (name, k) in fixtures() {
        let m = model(&k);
        for (a, b) in [
            (NerveKind::Branching, NerveKind::SemiGlobularBranching),
            (NerveKind::Merging, NerveKind::SemiGlobularMerging),
        ] {
            let ca = nerve(&m, a, NerveOptions::up_to(2)).unwrap();
            let cb = nerve(&m, b, NerveOptions::up_to(2)).unwrap();
            let cmp = comparison_to_semiglobular(&ca, &cb).unwrap();
            let (fa, fb) = (Folder::new(&ca, 200_000).unwrap(), Folder::new(&cb, 200_000).unwrap());
            let cf = formal_complex(&m, formal_kind_of(a), 2).unwrap();
            let r = check_comparison_square(&fa, &fb, &cmp, &reduced_complex(&cb), &cf).unwrap();
            assert!(r.checked > 0 && r.passed(), "{name} {}: {:?}", a.name(), r.failures);
        }
    }
}

#[test]
fn snf_fixtures() {
    let mut circle = ChainComplex::new("circle", vec![2, 2]);
    circle.diff[1] = vec![vec![(0, -1), (1, 1)], vec![(0, -1), (1, 1)]];
    let got: Vec<String> = circle.homology(1).unwrap().degrees.iter().map(|d| d.render()).collect();
    assert_eq!(got, ["Z", "Z"]);
    let mut two = ChainComplex::new("times two", vec![1, 1]);
    two.diff[1] = vec![vec![(0, 2)]];
    let h = two.homology(1).unwrap();
    assert_eq!(h.degrees[0].torsion_u64(), vec![2]);
    assert_eq!(h.degrees[0].betti, 0);
    assert_eq!(h.degrees[1].render(), "0");
    // Z/2 presented as a quotient: Z -> Z/(2), zero differential.
    let mut q = ChainComplex::new("quotient", vec![1]);
    q.relations[0] = vec![vec![(0, 2)]];
    assert_eq!(q.homology(0).unwrap().degrees[0].render(), "Z/2");
}

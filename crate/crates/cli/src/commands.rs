use std::path::Path;
use std::sync::Arc;

use serde_json::{json, Value};

use hda_core::corner::{corner_components, germ_oracle};
use hda_core::homology::{
    cf_to_cr_map, chain_of_cut, check_comparison_square, check_folding, formal_complex, formal_kind_of,
    reduced_complex, ChainComplex, FormalKind, Folder, GroupRank, HomologyResult,
};
use hda_core::nerves::{comparison_to_semiglobular, nerve, Cut, Model, NerveKind, NerveOptions};
use hda_core::omega_complex::{Category, OmegaCategory};
use hda_core::precubical::{parse, realize, ValidationReport};
use hda_core::{Error, PrecubicalSet, Result};

use crate::args::Global;
use crate::report::{digest, oracle_token, Report, Status};

pub const NERVES: [NerveKind; 5] = [
    NerveKind::Branching,
    NerveKind::Merging,
    NerveKind::Globular,
    NerveKind::SemiGlobularBranching,
    NerveKind::SemiGlobularMerging,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theory {
    Nerve(NerveKind),
    Formal(FormalKind),
}

pub fn parse_nerve(s: &str) -> Option<NerveKind> {
    NERVES.into_iter().find(|k| k.name() == s)
}

pub fn parse_theory(s: &str) -> Option<Theory> {
    if let Some(k) = parse_nerve(s) {
        return Some(Theory::Nerve(k));
    }
    [FormalKind::Globular, FormalKind::Branching, FormalKind::Merging]
        .into_iter()
        .find(|k| k.name() == s)
        .map(Theory::Formal)
}

pub struct Input {
    pub k: PrecubicalSet,
    pub validation: ValidationReport,
}

/// Reads, digests and parses `path`; failures are recorded on `r`.
pub fn load(path: &Path, r: &mut Report) -> Option<Input> {
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            r.fail(Status::ValidationFailure, format!("cannot read {}: {e}", path.display()));
            return None;
        }
    };
    r.input_digest = Some(digest(&bytes));
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(_) => {
            r.fail(Status::ValidationFailure, "input is not UTF-8");
            return None;
        }
    };
    match parse(&text) {
        Ok(k) => {
            let validation = k.validate();
            Some(Input { k, validation })
        }
        Err(e) => {
            r.error(&e);
            None
        }
    }
}

/// Loads an input that must be valid and admissible.
pub fn load_admissible(path: &Path, r: &mut Report) -> Option<Input> {
    let inp = load(path, r)?;
    if !inp.validation.is_admissible() {
        let why = violations(&inp.validation).into_iter().next().unwrap_or_default();
        r.fail(Status::ValidationFailure, format!("input is not valid and admissible: {why}"));
        r.payload = json!({ "validation": inp.validation });
        return None;
    }
    Some(inp)
}

pub fn violations(v: &ValidationReport) -> Vec<String> {
    let mut out: Vec<String> = v
        .missing_faces
        .iter()
        .map(|m| format!("missing face {m}"))
        .chain(v.dangling.iter().map(|m| format!("dangling {m}")))
        .chain(v.dimension_errors.iter().cloned())
        .chain(v.relation_violations.iter().cloned())
        .collect();
    if let Some(f) = v.admissibility.first_failure() {
        out.push(format!("not admissible: {f}"));
    }
    out
}

pub fn model(k: &PrecubicalSet, g: &Global) -> Result<Model> {
    let p = realize(k)?;
    let c = Category::enumerate(Arc::new(p), g.cap_elements)?;
    Ok(Model::complex(c).with_element_cap(g.cap_elements))
}

pub fn opts(g: &Global, n: usize) -> NerveOptions {
    NerveOptions { n_max: n, functor_cap: g.cap_functors }
}

pub fn group_json(g: &GroupRank) -> Value {
    json!({ "degree": g.degree, "group": g.render(), "betti": g.betti, "torsion": g.torsion })
}

fn table_json(h: &HomologyResult) -> Value {
    Value::Array(h.degrees.iter().map(group_json).collect())
}

fn complex_json(c: &ChainComplex) -> Value {
    json!({
        "name": c.name,
        "generators": c.gens,
        "relations": c.relations.iter().map(|r| r.len()).collect::<Vec<_>>(),
        "exact_through": c.exact_through,
    })
}

/// Builds the nerve at the largest level `<= max_dim` the caps allow.
/// Returns the cut and the level reached when it is below `max_dim`.
pub fn nerve_within_caps(m: &Model, kind: NerveKind, g: &Global, max_dim: usize) -> Result<(Cut, Option<usize>)> {
    let mut n = max_dim;
    loop {
        match nerve(m, kind, opts(g, n)) {
            Ok(c) => return Ok((c, (n < max_dim).then_some(n))),
            Err(Error::Resource { .. }) if n > 0 => n -= 1,
            Err(e) => return Err(e),
        }
    }
}

/// Germ-oracle cross check at every vertex of `m` and of its dual.
pub fn oracle_agreement(m: &Model, cap: usize) -> Result<(bool, Vec<Value>)> {
    let mut rows = Vec::new();
    let mut all = true;
    for (side, mm) in [("minus", m.clone()), ("plus", m.dual()?)] {
        let c = mm.complex.as_ref().ok_or_else(|| Error::input("oracle needs a complex"))?;
        for cc in corner_components(c.poset())? {
            let o = germ_oracle(c, cc.vertex, cap)?;
            let res = o.cross_check(c, &cc);
            all &= res.is_ok();
            rows.push(json!({
                "side": side,
                "vertex": c.poset().label(cc.vertex).to_string(),
                "germ_classes": o.classes.len(),
                "elements": o.category.size(),
                "new_composites": o.new_composites.len(),
                "agrees": res.is_ok(),
                "error": res.err().map(|e| e.to_string()),
            }));
        }
    }
    Ok((all, rows))
}

pub fn validate(path: &Path, _g: &Global) -> Report {
    let mut r = Report::new("validate", json!({ "path": path.display().to_string() }));
    let Some(inp) = load(path, &mut r) else { return r };
    let v = &inp.validation;
    let list = violations(v);
    if !v.is_admissible() {
        r.fail(Status::ValidationFailure, format!("{} violation(s)", list.len()));
    }
    r.payload = json!({
        "valid": v.is_valid(),
        "admissible": v.is_admissible(),
        "cell_counts": v.cell_counts,
        "violations": list,
        "report": v,
    });
    r
}

pub struct HomologyArgs<'a> {
    pub theory: &'a str,
    pub max_dim: usize,
    pub reduced: bool,
    pub fast: bool,
    pub oracle_token: Option<&'a str>,
}

pub fn homology(path: &Path, a: &HomologyArgs<'_>, g: &Global) -> Report {
    let config = json!({
        "path": path.display().to_string(),
        "theory": a.theory,
        "max_dim": a.max_dim,
        "reduced": a.reduced,
        "fast": a.fast,
        "cap_elements": g.cap_elements,
        "cap_functors": g.cap_functors,
    });
    let mut r = Report::new("homology", config);
    let Some(theory) = parse_theory(a.theory) else {
        r.fail(Status::ValidationFailure, format!("unknown theory {}", a.theory));
        return r;
    };
    if a.reduced && matches!(theory, Theory::Formal(_)) {
        r.fail(Status::ValidationFailure, "formal theories have no reduced variant");
        return r;
    }
    let Some(inp) = load_admissible(path, &mut r) else { return r };
    let m = match model(&inp.k, g) {
        Ok(m) => m,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    let semi = matches!(theory, Theory::Nerve(NerveKind::SemiGlobularBranching | NerveKind::SemiGlobularMerging));
    let mut oracle = Value::Null;
    if semi {
        if a.fast {
            let want = oracle_token(r.input_digest.as_deref().unwrap_or_default());
            if a.oracle_token != Some(want.as_str()) {
                r.fail(Status::ValidationFailure, "--fast needs the token of a passed `check oracle-agreement` run");
                return r;
            }
            oracle = json!("skipped (token accepted)");
        } else {
            match oracle_agreement(&m, g.cap_elements) {
                Ok((ok, rows)) => {
                    if !ok {
                        r.fail(Status::ConsistencyViolation, "germ oracle disagrees with the corner complexes");
                    }
                    oracle = json!({ "agrees": ok, "vertices": rows });
                }
                Err(e) => {
                    r.error(&e);
                    return r;
                }
            }
        }
    }
    let result = match theory {
        Theory::Formal(kind) => formal_complex(&m, kind, a.max_dim).map(|f| (f.complex, None, Value::Null)),
        Theory::Nerve(kind) => nerve_within_caps(&m, kind, g, a.max_dim).map(|(cut, partial)| {
            let cx = if a.reduced { reduced_complex(&cut) } else { chain_of_cut(&cut) };
            let comps: Vec<Value> = cut
                .components
                .iter()
                .map(|c| json!({ "component": c.label, "elements": c.target.size() }))
                .collect();
            (cx, partial, json!({ "simplices": cut.set.counts, "components": comps }))
        }),
    };
    let (cx, partial, nerve_info) = match result {
        Ok(x) => x,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    let dd = cx.check_boundaries();
    if !dd.passed() {
        r.fail(Status::ConsistencyViolation, format!("dd != 0: {}", dd.failures.join("; ")));
    }
    let top = partial.unwrap_or(a.max_dim);
    let h = match cx.homology(top) {
        Ok(h) => h,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    if let Some(d) = partial {
        r.fail(Status::ResourceCap, format!("inconclusive beyond degree {d}"));
    }
    r.payload = json!({
        "theory": a.theory,
        "reduced": a.reduced,
        "complex": complex_json(&cx),
        "boundary_check": { "checked": dd.checked, "passed": dd.passed() },
        "nerve": nerve_info,
        "oracle": oracle,
        "homology": table_json(&h),
        "inconclusive_beyond": partial,
    });
    r
}

pub fn nerve_dump(path: &Path, theory: &str, max_dim: usize, g: &Global) -> Report {
    let config = json!({ "path": path.display().to_string(), "theory": theory, "max_dim": max_dim });
    let mut r = Report::new("nerve", config);
    let Some(kind) = parse_nerve(theory) else {
        r.fail(Status::ValidationFailure, format!("unknown nerve {theory}"));
        return r;
    };
    let Some(inp) = load_admissible(path, &mut r) else { return r };
    let cut = match model(&inp.k, g).and_then(|m| nerve_within_caps(&m, kind, g, max_dim)) {
        Ok((c, partial)) => {
            if let Some(d) = partial {
                r.fail(Status::ResourceCap, format!("inconclusive beyond degree {d}"));
            }
            c
        }
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    let ids = cut.set.check_identities();
    let ev = cut.check_ev_degeneracies();
    for rep in [&ids, &ev] {
        if !rep.passed() {
            r.fail(Status::ConsistencyViolation, rep.failures.join("; "));
        }
    }
    r.payload = json!({
        "counts": cut.set.counts,
        "identities": ids,
        "ev_degeneracies": ev,
        "dump": cut.dump(),
    });
    r
}

/// H, HR and HF in degrees up to `max_dim`, with CF -> CR evidence.
pub fn compare(path: &Path, max_dim: usize, g: &Global) -> Report {
    let config = json!({ "path": path.display().to_string(), "max_dim": max_dim });
    let mut r = Report::new("compare", config);
    let Some(inp) = load_admissible(path, &mut r) else { return r };
    let m = match model(&inp.k, g) {
        Ok(m) => m,
        Err(e) => {
            r.error(&e);
            return r;
        }
    };
    let mut rows = Vec::new();
    let mut cuts: Vec<Option<Cut>> = Vec::new();
    for kind in NERVES {
        match compare_row(&m, kind, max_dim, g, &mut r) {
            Some((row, cut)) => {
                rows.push(row);
                cuts.push(Some(cut));
            }
            None => {
                rows.push(json!({ "theory": kind.name(), "status": "failed" }));
                cuts.push(None);
            }
        }
    }
    let mut squares = Vec::new();
    for (a, b) in [(0, 3), (1, 4)] {
        let (Some(ca), Some(cb)) = (&cuts[a], &cuts[b]) else { continue };
        match comparison_square(&m, ca, cb, max_dim, g) {
            Ok(rep) => {
                if !rep.0 {
                    r.fail(Status::ConsistencyViolation, format!("comparison square fails for {}", ca.kind.name()));
                }
                squares.push(rep.1);
            }
            Err(e) => r.error(&e),
        }
    }
    r.payload = json!({
        "label": "evidence",
        "note": "agreement in computed degrees is evidence, not proof; disagreements are reported as found",
        "theories": rows,
        "comparison_squares": squares,
    });
    r
}

fn compare_row(m: &Model, kind: NerveKind, max_dim: usize, g: &Global, r: &mut Report) -> Option<(Value, Cut)> {
    let built = (|| -> Result<_> {
        let (cut, partial) = nerve_within_caps(m, kind, g, max_dim)?;
        let top = partial.unwrap_or(max_dim);
        let ck = chain_of_cut(&cut);
        let cr = reduced_complex(&cut);
        let cf = formal_complex(m, formal_kind_of(kind), top)?;
        let h = ck.homology(top)?;
        let hr = cr.homology(top)?;
        let hf = cf.complex.homology(top)?;
        let folder = Folder::new(&cut, g.cap_functors)?;
        let fold = check_folding(&folder, &cr)?;
        let map = cf_to_cr_map(&cf, &folder)?;
        let ev = map.check(&cf.complex, &cr);
        let dd: Vec<(String, bool)> =
            [&ck, &cr, &cf.complex].iter().map(|c| (c.name.clone(), c.check_boundaries().passed())).collect();
        Ok((cut, partial, h, hr, hf, fold, ev, dd))
    })();
    let (cut, partial, h, hr, hf, fold, ev, dd) = match built {
        Ok(x) => x,
        Err(e) => {
            r.error(&e);
            return None;
        }
    };
    if let Some(d) = partial {
        r.fail(Status::ResourceCap, format!("{}: inconclusive beyond degree {d}", kind.name()));
    }
    for (name, ok) in &dd {
        if !ok {
            r.fail(Status::ConsistencyViolation, format!("dd != 0 in {name}"));
        }
    }
    if !fold.passed() || !ev.chain_map.passed() || !ev.relations.passed() {
        r.fail(Status::ConsistencyViolation, format!("{}: folding postconditions fail", kind.name()));
    }
    let degrees: Vec<Value> = (0..h.degrees.len().min(hr.degrees.len()).min(hf.degrees.len()))
        .map(|n| {
            let (a, b, c) = (&h.degrees[n], &hr.degrees[n], &hf.degrees[n]);
            json!({
                "degree": n,
                "H": a.render(),
                "HR": b.render(),
                "HF": c.render(),
                "H_eq_HR": a == b,
                "HR_eq_HF": b == c,
            })
        })
        .collect();
    let agree = degrees.iter().all(|d| d["H_eq_HR"] == true && d["HR_eq_HF"] == true);
    let row = json!({
        "theory": kind.name(),
        "formal": formal_kind_of(kind).name(),
        "degrees": degrees,
        "all_agree": agree,
        "inconclusive_beyond": partial,
        "cf_to_cr": {
            "chain_map": ev.chain_map.passed(),
            "relations": ev.relations.passed(),
            "cokernel": ev.cokernel.iter().map(|g| g.render()).collect::<Vec<_>>(),
            "kernel_rank": ev.kernel_rank,
            "surjective": ev.surjective(),
        },
        "folding_checks": { "checked": fold.checked(), "passed": fold.passed() },
        "boundary_checks": dd.iter().map(|(n, ok)| json!({ "complex": n, "passed": ok })).collect::<Vec<_>>(),
    });
    Some((row, cut))
}

fn comparison_square(m: &Model, br: &Cut, gl: &Cut, max_dim: usize, g: &Global) -> Result<(bool, Value)> {
    let cmp = comparison_to_semiglobular(br, gl)?;
    let cmp_check = cmp.check(br, gl);
    let fa = Folder::new(br, g.cap_functors)?;
    let fb = Folder::new(gl, g.cap_functors)?;
    let cf = formal_complex(m, formal_kind_of(br.kind), max_dim)?;
    let sq = check_comparison_square(&fa, &fb, &cmp, &reduced_complex(gl), &cf)?;
    let ok = cmp_check.passed() && sq.passed();
    Ok((
        ok,
        json!({
            "from": br.kind.name(),
            "to": gl.kind.name(),
            "comparison_identities": cmp_check,
            "square": sq,
        }),
    ))
}

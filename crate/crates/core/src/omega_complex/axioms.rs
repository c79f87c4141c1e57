use std::collections::HashMap;

use super::category::{Category, OmegaCategory};
use super::face::Sign;

/// Outcome of an exhaustive axiom check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub(crate) fn record(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 32 {
            self.failures.push(msg());
        }
    }

    pub fn merge(&mut self, other: AxiomReport) {
        self.checked += other.checked;
        self.failures.extend(other.failures);
    }
}

/// `right[p][x]`: the morphisms `y` with `s_p y = t_p x` and `p < dim y`.
fn right_index(c: &dyn OmegaCategory) -> Vec<HashMap<usize, Vec<usize>>> {
    let m = c.max_dim();
    let mut by_source = vec![HashMap::<usize, Vec<usize>>::new(); m];
    for y in 0..c.size() {
        for p in 0..c.dim(y) {
            by_source[p].entry(c.source(y, p)).or_default().push(y);
        }
    }
    by_source
}

/// Right partners along `p`, including the identity `t_p x`.
fn partners(idx: &[HashMap<usize, Vec<usize>>], c: &dyn OmegaCategory, x: usize, p: usize) -> Vec<usize> {
    let mut v = vec![c.target(x, p)];
    v.extend_from_slice(right_of(idx, c, x, p));
    v
}

fn right_of<'a>(idx: &'a [HashMap<usize, Vec<usize>>], c: &dyn OmegaCategory, x: usize, p: usize) -> &'a [usize] {
    idx.get(p)
        .and_then(|m| m.get(&c.target(x, p)))
        .map(|v| v.as_slice())
        .unwrap_or(&[])
}

/// `d_m^b d_n^a x` is `d_m^b x` for `m < n` and `d_n^a x` otherwise.
pub fn check_globularity(c: &dyn OmegaCategory) -> AxiomReport {
    let mut r = AxiomReport::default();
    for x in 0..c.size() {
        let d = c.dim(x);
        for n in 0..=d {
            for a in Sign::both() {
                let dn = c.boundary(x, n, a);
                for m in 0..=d {
                    for b in Sign::both() {
                        let lhs = c.boundary(dn, m, b);
                        let rhs = if m < n { c.boundary(x, m, b) } else { dn };
                        r.record(lhs == rhs, || {
                            format!("d_{m}^{b} d_{n}^{a} {} != expected", c.label(x))
                        });
                    }
                }
                r.record(c.dim(dn) <= n, || format!("d_{n}^{a} {} too large", c.label(x)));
            }
        }
    }
    r
}

/// Units, and the boundaries of composites:
/// `s_p(x *_p y) = s_p x`, `t_p(x *_p y) = t_p y`, and
/// `d_n(x *_p y) = d_n x *_p d_n y` for `n > p`.
pub fn check_units(c: &dyn OmegaCategory) -> AxiomReport {
    let mut r = AxiomReport::default();
    let idx = right_index(c);
    for x in 0..c.size() {
        for p in 0..c.dim(x) {
            let s = c.source(x, p);
            let t = c.target(x, p);
            r.record(c.compose(s, x, p) == Some(x), || format!("s_{p} x *{p} x != x for {}", c.label(x)));
            r.record(c.compose(x, t, p) == Some(x), || format!("x *{p} t_{p} x != x for {}", c.label(x)));
            for &y in right_of(&idx, c, x, p) {
                let Some(z) = c.compose(x, y, p) else {
                    r.record(false, || format!("missing composite {} *{p} {}", c.label(x), c.label(y)));
                    continue;
                };
                r.record(c.source(z, p) == c.source(x, p) && c.target(z, p) == c.target(y, p), || {
                    format!("p-boundary of {} *{p} {}", c.label(x), c.label(y))
                });
                for m in (0..=c.dim(z)).filter(|&m| m != p) {
                    for a in Sign::both() {
                        let e = c.compose(c.boundary(x, m, a), c.boundary(y, m, a), p);
                        r.record(e == Some(c.boundary(z, m, a)), || {
                            format!("d_{m}^{a} of {} *{p} {}", c.label(x), c.label(y))
                        });
                    }
                }
            }
        }
    }
    r
}

/// `(x *_p y) *_p z = x *_p (y *_p z)` over all composable triples.
pub fn check_associativity(c: &dyn OmegaCategory) -> AxiomReport {
    let mut r = AxiomReport::default();
    let idx = right_index(c);
    for x in 0..c.size() {
        for p in 0..c.dim(x) {
            for &y in right_of(&idx, c, x, p) {
                let Some(xy) = c.compose(x, y, p) else { continue };
                for &z in right_of(&idx, c, y, p) {
                    let lhs = c.compose(xy, z, p);
                    let rhs = c.compose(y, z, p).and_then(|yz| c.compose(x, yz, p));
                    r.record(lhs.is_some() && lhs == rhs, || {
                        format!("associativity at {} {} {} along {p}", c.label(x), c.label(y), c.label(z))
                    });
                }
            }
        }
    }
    r
}

/// `(x *_n y) *_m (z *_n w) = (x *_m z) *_n (y *_m w)` for `m < n` whenever
/// the four inner composites exist. Identities count as partners, so
/// whiskerings are included.
pub fn check_exchange(c: &dyn OmegaCategory) -> AxiomReport {
    let mut r = AxiomReport::default();
    let idx = right_index(c);
    let top = c.max_dim();
    for x in (0..c.size()).filter(|&x| c.dim(x) >= 1) {
        for n in 1..top {
            for m in 0..n.min(c.dim(x)) {
                for y in partners(&idx, c, x, n) {
                    let Some(xy) = c.compose(x, y, n) else { continue };
                    for &z in right_of(&idx, c, x, m) {
                        let Some(xz) = c.compose(x, z, m) else { continue };
                        for w in partners(&idx, c, z, n) {
                            let Some(yw) = c.compose(y, w, m) else { continue };
                            let Some(zw) = c.compose(z, w, n) else { continue };
                            let lhs = c.compose(xy, zw, m);
                            let rhs = c.compose(xz, yw, n);
                            r.record(lhs.is_some() && lhs == rhs, || {
                                format!(
                                    "exchange ({m},{n}) at {} {} {} {}",
                                    c.label(x),
                                    c.label(y),
                                    c.label(z),
                                    c.label(w)
                                )
                            });
                        }
                    }
                }
            }
        }
    }
    r
}

/// `t_p X = s_p Y = X n Y` and `X *_p Y = X u Y` at every composition of
/// the enumerated category, recomputed on face sets.
pub fn check_intersection_rule(c: &Category) -> AxiomReport {
    let mut r = AxiomReport::default();
    let p_ = c.poset();
    let idx = right_index(c);
    for x in 0..c.size() {
        for p in 0..c.dim(x) {
            for &y in right_of(&idx, c, x, p) {
                let (a, b) = (c.element(x), c.element(y));
                let meet = a.intersection(b);
                let ok = p_.target(a, p) == meet
                    && p_.source(b, p) == meet
                    && c.compose(x, y, p).map(|z| c.element(z)) == Some(&a.union(b));
                r.record(ok, || format!("intersection rule at {} *{p} {}", c.label(x), c.label(y)));
            }
        }
    }
    r
}

/// Every morphism `A` of dim >= 1 has, for each `r < dim A`, some `A'` with
/// `A *_r A' = s_r A = t_r A'` and `A' *_r A = s_r A' = t_r A`.
pub fn is_groupoid(c: &dyn OmegaCategory) -> bool {
    let idx = right_index(c);
    (0..c.size()).all(|a| {
        (0..c.dim(a)).all(|r| {
            right_of(&idx, c, a, r).iter().any(|&b| {
                c.compose(a, b, r) == Some(c.source(a, r))
                    && c.target(b, r) == c.source(a, r)
                    && c.compose(b, a, r) == Some(c.source(b, r))
                    && c.source(b, r) == c.target(a, r)
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_complex::{cube, Category, TableCategory};

    #[test]
    fn interval_is_not_a_groupoid() {
        let c = Category::of_poset(cube(1)).unwrap();
        assert!(!is_groupoid(&c));
    }

    #[test]
    fn identities_only_is_a_groupoid() {
        let c = TableCategory::new(vec!["a".into(), "b".into()], vec![0, 0], vec![vec![], vec![]], vec![vec![], vec![]], vec![])
            .unwrap();
        assert!(is_groupoid(&c));
    }

    #[test]
    fn square_axioms() {
        let c = Category::of_poset(cube(2)).unwrap();
        for rep in [check_globularity(&c), check_units(&c)] {
            assert!(rep.passed(), "{:?}", rep.failures);
            assert!(rep.checked > 0);
        }
        assert!(check_associativity(&c).passed());
        assert!(check_exchange(&c).passed());
    }
}

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use super::simplicial::AugSimplicialSet;

pub const DEFAULT_HORN_CAP: usize = 1_000_000;

/// A horn `Lambda^n_k`: faces `d_i` for `i != k`, given as `F_{n-1}` indices.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Horn {
    pub n: usize,
    pub k: usize,
    pub faces: Vec<Option<usize>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct KanReport {
    pub horns_checked: usize,
    pub unfillable_count: usize,
    /// The first unfillable horns found, in search order.
    pub unfillable: Vec<Horn>,
    /// False when the horn cap stopped the search; a missing filler is then
    /// not a verdict.
    pub conclusive: bool,
}

impl KanReport {
    pub fn is_kan(&self) -> bool {
        self.conclusive && self.unfillable.is_empty()
    }

    pub fn verdict(&self) -> &'static str {
        match (self.unfillable.is_empty(), self.conclusive) {
            (false, _) => "unfillable horns",
            (true, true) => "kan",
            (true, false) => "inconclusive",
        }
    }
}

fn key(faces: &[usize], k: usize) -> Vec<usize> {
    faces.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &f)| f).collect()
}

/// Some `x` in `F_n` with `d_i x = faces[i]` for every `i != k`.
pub fn find_filler(s: &AugSimplicialSet, horn: &Horn) -> Option<usize> {
    let want: Vec<usize> = horn.faces.iter().flatten().copied().collect();
    (0..s.counts[horn.n]).find(|&x| key(&s.faces[horn.n][x], horn.k) == want)
}

struct HornSearch<'a> {
    s: &'a AugSimplicialSet,
    n: usize,
    k: usize,
    // by_face[i][d_i y] over F_{n-1}
    by_face: Vec<HashMap<usize, Vec<usize>>>,
    fillers: HashSet<Vec<usize>>,
    chosen: Vec<Option<usize>>,
    report: &'a mut KanReport,
    cap: usize,
    max_report: usize,
}

impl HornSearch<'_> {
    fn go(&mut self, j: usize) -> bool {
        if j > self.n {
            if self.report.horns_checked >= self.cap {
                self.report.conclusive = false;
                return false;
            }
            self.report.horns_checked += 1;
            let faces: Vec<usize> = self.chosen.iter().flatten().copied().collect();
            if !self.fillers.contains(&faces) {
                self.report.unfillable_count += 1;
                if self.report.unfillable.len() < self.max_report {
                    self.report.unfillable.push(Horn { n: self.n, k: self.k, faces: self.chosen.clone() });
                }
            }
            return true;
        }
        if j == self.k {
            return self.go(j + 1);
        }
        let earlier: Vec<usize> = (0..j).filter(|&i| i != self.k).collect();
        let cands: Vec<usize> = match earlier.first() {
            Some(&i0) if self.n >= 2 => {
                let yi = self.chosen[i0].unwrap();
                let want = self.s.face(self.n - 1, yi, j - 1);
                self.by_face[i0].get(&want).cloned().unwrap_or_default()
            }
            _ => (0..self.s.counts[self.n - 1]).collect(),
        };
        for y in cands {
            let ok = self.n < 2
                || earlier.iter().all(|&i| {
                    self.s.face(self.n - 1, y, i) == self.s.face(self.n - 1, self.chosen[i].unwrap(), j - 1)
                });
            if !ok {
                continue;
            }
            self.chosen[j] = Some(y);
            if !self.go(j + 1) {
                self.chosen[j] = None;
                return false;
            }
        }
        self.chosen[j] = None;
        true
    }
}

/// Every horn `Lambda^n_k` with `1 <= n <= n_max` and its filler status.
pub fn kan_check(s: &AugSimplicialSet, n_max: usize, horn_cap: usize) -> KanReport {
    let mut report = KanReport { horns_checked: 0, unfillable_count: 0, unfillable: Vec::new(), conclusive: true };
    let top = match s.top() {
        Some(t) => t.min(n_max),
        None => return report,
    };
    for n in 1..=top {
        let by_face: Vec<HashMap<usize, Vec<usize>>> = (0..n)
            .map(|i| {
                let mut m: HashMap<usize, Vec<usize>> = HashMap::new();
                if n >= 2 {
                    for y in 0..s.counts[n - 1] {
                        m.entry(s.face(n - 1, y, i)).or_default().push(y);
                    }
                }
                m
            })
            .collect();
        for k in 0..=n {
            let fillers = (0..s.counts[n]).map(|x| key(&s.faces[n][x], k)).collect();
            let mut h = HornSearch {
                s,
                n,
                k,
                by_face: by_face.clone(),
                fillers,
                chosen: vec![None; n + 1],
                report: &mut report,
                cap: horn_cap,
                max_report: 100,
            };
            if !h.go(0) {
                return report;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    // The nerve of a single arrow a -> b through level 2.
    fn arrow_nerve() -> AugSimplicialSet {
        // F_0: a=0, b=1. F_1: 1a=0, f=1, 1b=2 (d_0 = target, d_1 = source).
        // F_2: (1a,1a)=0, (1a,f)=1, (f,1b)=2, (1b,1b)=3 as composable pairs
        // (g after h), faces (d_0, d_1, d_2) = (g, g.h, h).
        AugSimplicialSet {
            base: 1,
            counts: vec![2, 3, 4],
            faces: vec![
                vec![vec![]; 2],
                vec![vec![0, 0], vec![1, 0], vec![1, 1]],
                vec![vec![0, 0, 0], vec![1, 1, 0], vec![2, 1, 1], vec![2, 2, 2]],
            ],
            augmentation: vec![0, 0],
            degeneracies: vec![],
        }
    }

    #[test]
    fn arrow_nerve_fills_inner_horns_only() {
        let s = arrow_nerve();
        let r = kan_check(&s, 2, 1000);
        assert!(r.conclusive);
        assert!(r.unfillable.iter().all(|h| h.k != 1));
        // g.f = 1a has no solution.
        assert!(r.unfillable.contains(&Horn { n: 2, k: 0, faces: vec![None, Some(0), Some(1)] }));
        assert!(find_filler(&s, &Horn { n: 2, k: 1, faces: vec![Some(2), None, Some(1)] }).is_some());
    }

    #[test]
    fn cap_makes_report_inconclusive() {
        let r = kan_check(&arrow_nerve(), 2, 1);
        assert!(!r.conclusive);
        assert_eq!(r.verdict(), "inconclusive");
    }
}

use super::chain::ChainComplex;
use super::int::normalize;
use crate::nerves::Cut;

/// Degree `n + 1` is free on `F_n`, degree 0 on `F_{-1}`; the boundary is the
/// alternating sum of faces, and the augmentation on `F_0`.
pub fn chain_of_cut(s: &Cut) -> ChainComplex {
    let top = s.top().map_or(0, |t| t + 1);
    let mut gens = vec![s.set.base];
    gens.extend((0..top).map(|n| s.count(n)));
    let mut k = ChainComplex::new(format!("C^{}", s.kind.name()), gens);
    k.labels[0] = s.base_labels.clone();
    if top >= 1 {
        k.diff[1] = s.set.augmentation.iter().map(|&a| vec![(a, 1)]).collect();
    }
    for n in 1..top {
        k.diff[n + 1] = (0..s.count(n))
            .map(|x| {
                normalize(
                    s.set.faces[n][x]
                        .iter()
                        .enumerate()
                        .map(|(i, &f)| (f, if i % 2 == 0 { 1 } else { -1 }))
                        .collect(),
                )
            })
            .collect();
    }
    // F_top is computed but F_{top+1} is not: the top degree has no incoming boundary.
    k.exact_through = top.saturating_sub(1);
    k
}

/// Simplices of `F_n` whose evaluation has dimension below `n`, for `n >= 1`.
pub fn thin_simplices(s: &Cut, n: usize) -> Vec<usize> {
    (0..s.count(n)).filter(|&x| s.is_thin(n, x)).collect()
}

/// `CR_n = C_n / (M_n + dM_{n+1})`, with `M_n` spanned by thin simplices of
/// `F_{n-1}`; `M_0 = M_1 = 0`.
pub fn reduced_complex(s: &Cut) -> ChainComplex {
    let mut k = chain_of_cut(s);
    k.name = format!("CR^{}", s.kind.name());
    for n in 1..k.gens.len() {
        let mut rels: Vec<Vec<(usize, i64)>> =
            if n >= 2 { thin_simplices(s, n - 1).into_iter().map(|x| vec![(x, 1)]).collect() } else { Vec::new() };
        if n + 1 < k.gens.len() {
            rels.extend(thin_simplices(s, n).into_iter().map(|x| k.diff[n + 1][x].clone()));
        }
        k.relations[n] = rels;
    }
    k
}

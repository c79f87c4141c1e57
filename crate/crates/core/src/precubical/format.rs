use super::set::{valid_name, PrecubicalSet};
use crate::error::{Error, Result};
use crate::omega_complex::Sign;

pub const HEADER: &str = "pcs v1";

/// Parses the `pcs v1` format. Every face map of every positive-dimensional
/// cell must be present.
pub fn parse(text: &str) -> Result<PrecubicalSet> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let header = lines.by_ref().find(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    match header {
        Some((_, HEADER)) => {}
        Some((n, other)) => {
            return Err(Error::Parse { line: n, msg: format!("expected {HEADER:?}, found {other:?}") })
        }
        None => return Err(Error::Parse { line: 1, msg: "empty input".into() }),
    }
    let perr = |line: usize, msg: String| Error::Parse { line, msg };
    let mut k = PrecubicalSet::new();
    let mut faces: Vec<(usize, String, usize, Sign, String)> = Vec::new();
    for (n, l) in lines {
        if l.is_empty() || l.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        match toks.as_slice() {
            ["cell", name, dim] => {
                let d: usize = dim.parse().map_err(|_| perr(n, format!("bad dimension {dim:?}")))?;
                if !valid_name(name) {
                    return Err(perr(n, format!("invalid cell name {name:?}")));
                }
                k.add_cell(name, d).map_err(|e| perr(n, e.to_string()))?;
            }
            ["face", name, i, sign, target] => {
                let i: usize = i.parse().map_err(|_| perr(n, format!("bad face index {i:?}")))?;
                let s = match *sign {
                    "-" => Sign::Minus,
                    "+" => Sign::Plus,
                    other => return Err(perr(n, format!("bad sign {other:?}"))),
                };
                if !valid_name(target) {
                    return Err(perr(n, format!("invalid cell name {target:?}")));
                }
                faces.push((n, name.to_string(), i, s, target.to_string()));
            }
            _ => return Err(perr(n, format!("unrecognized line {l:?}"))),
        }
    }
    for (n, name, i, s, target) in faces {
        k.set_face(&name, i, s, &target).map_err(|e| perr(n, e.to_string()))?;
    }
    if let Some(m) = k.validate().missing_faces.first() {
        return Err(Error::input(format!("missing face map {m}")));
    }
    Ok(k)
}

/// Canonical text: cells by (dim, name), then faces by cell, index and sign.
pub fn print(k: &PrecubicalSet) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    let names = k.names();
    for name in &names {
        out.push_str(&format!("cell {name} {}\n", k.dim(name).unwrap()));
    }
    for name in &names {
        for i in 1..=k.dim(name).unwrap() {
            for s in Sign::both() {
                if let Some(t) = k.face(name, i, s) {
                    out.push_str(&format!("face {name} {i} {s} {t}\n"));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precubical::{fork_complex, standard_cube};

    #[test]
    fn roundtrip() {
        for k in [standard_cube(2), fork_complex()] {
            assert_eq!(parse(&print(&k)).unwrap(), k);
        }
    }

    #[test]
    fn rejects_missing_face() {
        let t = "pcs v1\ncell a 0\ncell b 0\ncell e 1\nface e 1 - a\n";
        assert!(parse(t).is_err());
    }

    #[test]
    fn reports_line_numbers() {
        let t = "# comment\npcs v1\n\ncell a x\n";
        assert_eq!(parse(t).unwrap_err(), Error::Parse { line: 4, msg: "bad dimension \"x\"".into() });
    }
}

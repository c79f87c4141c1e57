use super::faceset::FaceSet;
use super::poset::FacePoset;
use crate::error::{Error, Result};

/// A parenthesized pasting expression over atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Atom(usize),
    Compose(Box<Expr>, Box<Expr>, usize),
}

impl Expr {
    pub fn atom(poset: &FacePoset, label: &str) -> Result<Expr> {
        Ok(Expr::Atom(poset.id(label)?))
    }

    pub fn comp(self, other: Expr, p: usize) -> Expr {
        Expr::Compose(Box::new(self), Box::new(other), p)
    }

    /// Bottom-up evaluation; the error names the first failing node.
    pub fn evaluate(&self, poset: &FacePoset) -> Result<FaceSet> {
        match self {
            Expr::Atom(f) => {
                if *f >= poset.len() {
                    return Err(Error::input(format!("unknown face id {f}")));
                }
                if poset.dim(*f) == 0 {
                    return Err(Error::input(format!(
                        "leaf {} has dimension 0",
                        poset.label(*f)
                    )));
                }
                Ok(poset.atom(*f))
            }
            Expr::Compose(a, b, p) => {
                let x = a.evaluate(poset)?;
                let y = b.evaluate(poset)?;
                poset.compose(&x, &y, *p).map_err(|e| match e {
                    Error::Compose { .. } => Error::input(format!(
                        "invalid node {}: {e}",
                        self.render(poset)
                    )),
                    other => other,
                })
            }
        }
    }

    pub fn is_valid(&self, poset: &FacePoset) -> (bool, Option<FaceSet>) {
        match self.evaluate(poset) {
            Ok(x) => (true, Some(x)),
            Err(_) => (false, None),
        }
    }

    pub fn render(&self, poset: &FacePoset) -> String {
        match self {
            Expr::Atom(f) => format!("R({})", poset.label(*f)),
            Expr::Compose(a, b, p) => {
                format!("({} *{p} {})", a.render(poset), b.render(poset))
            }
        }
    }

    /// Relabels leaves.
    pub fn map_atoms(&self, f: &impl Fn(usize) -> usize) -> Expr {
        match self {
            Expr::Atom(a) => Expr::Atom(f(*a)),
            Expr::Compose(a, b, p) => Expr::Compose(Box::new(a.map_atoms(f)), Box::new(b.map_atoms(f)), *p),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::omega_complex::cube;

    #[test]
    fn valid_and_invalid_expressions() {
        let c = cube(2);
        let a = Expr::atom(&c, "-0").unwrap();
        let good = a.clone().comp(Expr::atom(&c, "0+").unwrap(), 0);
        let bad = a.comp(Expr::atom(&c, "0-").unwrap(), 0);
        let (ok, x) = good.is_valid(&c);
        assert!(ok);
        assert_eq!(c.label_strings(&x.unwrap()), ["--", "-0", "-+", "0+", "++"]);
        assert!(!bad.is_valid(&c).0);
        let top = Expr::atom(&c, "00").unwrap();
        assert_eq!(top.evaluate(&c).unwrap(), c.atom(c.id("00").unwrap()));
    }
}

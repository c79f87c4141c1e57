use std::fmt;

use serde::{Deserialize, Serialize};

/// Orientation of a boundary: `Minus` is the source side, `Plus` the target side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Minus, Sign::Plus]
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A cube letter, ordered `- < 0 < +`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Minus,
    Zero,
    Plus,
}

impl Letter {
    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            '-' => Some(Letter::Minus),
            '0' => Some(Letter::Zero),
            '+' => Some(Letter::Plus),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::Minus => '-',
            Letter::Zero => '0',
            Letter::Plus => '+',
        }
    }

    pub fn of_sign(s: Sign) -> Letter {
        match s {
            Sign::Minus => Letter::Minus,
            Sign::Plus => Letter::Plus,
        }
    }

    /// Letter reversal `- <-> +`.
    pub fn dual(self) -> Letter {
        match self {
            Letter::Minus => Letter::Plus,
            Letter::Zero => Letter::Zero,
            Letter::Plus => Letter::Minus,
        }
    }
}

pub fn word_from_str(s: &str) -> Option<Vec<Letter>> {
    s.chars().map(Letter::from_char).collect()
}

pub fn word_to_string(w: &[Letter]) -> String {
    w.iter().map(|l| l.to_char()).collect()
}

/// Label of a face. Orders are lexicographic; cube words use `- < 0 < +`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FaceLabel {
    Cube(Vec<Letter>),
    Simplex(Vec<usize>),
    Cell(String),
}

impl FaceLabel {
    pub fn cube(s: &str) -> FaceLabel {
        FaceLabel::Cube(word_from_str(s).unwrap_or_else(|| panic!("bad cube word {s:?}")))
    }

    pub fn simplex(v: &[usize]) -> FaceLabel {
        FaceLabel::Simplex(v.to_vec())
    }

    /// Parses `(045)` / `(0,4,10)` as simplexes, words over `-0+` as cubes,
    /// anything else as a cell name.
    pub fn parse(s: &str) -> FaceLabel {
        let t = s.trim();
        if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let v: Option<Vec<usize>> = if inner.contains(',') {
                inner.split(',').map(|p| p.trim().parse().ok()).collect()
            } else {
                inner.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect()
            };
            if let Some(v) = v {
                return FaceLabel::Simplex(v);
            }
        }
        if !t.is_empty() {
            if let Some(w) = word_from_str(t) {
                return FaceLabel::Cube(w);
            }
        }
        FaceLabel::Cell(t.to_string())
    }

    /// Dimension implied by the label, when the label carries one.
    pub fn implied_dim(&self) -> Option<usize> {
        match self {
            FaceLabel::Cube(w) => Some(w.iter().filter(|&&l| l == Letter::Zero).count()),
            FaceLabel::Simplex(v) => v.len().checked_sub(1),
            FaceLabel::Cell(_) => None,
        }
    }

    pub fn as_cube(&self) -> Option<&[Letter]> {
        match self {
            FaceLabel::Cube(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_simplex(&self) -> Option<&[usize]> {
        match self {
            FaceLabel::Simplex(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for FaceLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceLabel::Cube(w) => write!(f, "{}", word_to_string(w)),
            FaceLabel::Simplex(v) => {
                let sep = if v.iter().any(|&x| x > 9) { "," } else { "" };
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "({})", parts.join(sep))
            }
            FaceLabel::Cell(s) => write!(f, "{s}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order() {
        assert!(Letter::Minus < Letter::Zero && Letter::Zero < Letter::Plus);
        assert!(FaceLabel::cube("-0") < FaceLabel::cube("0-"));
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["(04589)", "-0+", "cellA", "(0,4,10)"] {
            assert_eq!(FaceLabel::parse(s).to_string(), s);
        }
        assert_eq!(FaceLabel::cube("0+00").implied_dim(), Some(3));
        assert_eq!(FaceLabel::simplex(&[0, 4]).implied_dim(), Some(1));
    }
}

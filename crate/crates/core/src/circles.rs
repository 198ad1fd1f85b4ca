//! Colored circles with exact or symbolic lengths.

use std::fmt;

use num_rational::BigRational;
use num_traits::Signed;

use crate::algebra::{format_rational, parse_rational, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Value(BigRational),
    Symbol(String),
}

impl Length {
    pub fn to_polynomial(&self) -> Polynomial {
        match self {
            Length::Value(v) => Polynomial::constant(v.clone()),
            Length::Symbol(s) => Polynomial::var(s),
        }
    }

    fn parse(text: &str) -> Result<Length> {
        let mut chars = text.chars();
        match chars.next() {
            Some(c) if c.is_ascii_lowercase() => {
                if chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_') {
                    Ok(Length::Symbol(text.to_string()))
                } else {
                    Err(Error::Parse(format!("bad length symbol {text:?}")))
                }
            }
            Some(c) if c.is_ascii_digit() => {
                let v = parse_rational(text)
                    .map_err(|_| Error::Parse(format!("bad length {text:?}")))?;
                if !v.is_positive() {
                    return Err(Error::Parse(format!("length {text:?} must be positive")));
                }
                Ok(Length::Value(v))
            }
            _ => Err(Error::Parse(format!("bad length {text:?}"))),
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Value(v) => write!(f, "{}", format_rational(v)),
            Length::Symbol(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub color: usize,
    /// Position within its color, from 0.
    pub index: usize,
    pub length: Length,
}

/// Circles grouped by color, colors increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleSet {
    colors: Vec<(usize, Vec<Length>)>,
}

impl CircleSet {
    pub fn new(mut colors: Vec<(usize, Vec<Length>)>) -> Result<Self> {
        colors.sort_by_key(|c| c.0);
        if colors.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidInput("a color is listed twice".into()));
        }
        if colors.iter().any(|(c, ls)| *c == 0 || ls.is_empty()) {
            return Err(Error::InvalidInput(
                "colors start at 1 and need a circle".into(),
            ));
        }
        Ok(CircleSet { colors })
    }

    /// Circles named `l_<color>_<j>`, with `counts[i]` circles of color `i + 1`.
    pub fn symbolic(counts: &[usize]) -> Result<Self> {
        Self::new(
            counts
                .iter()
                .enumerate()
                .map(|(i, &m)| {
                    let ls = (1..=m)
                        .map(|j| Length::Symbol(format!("l_{}_{}", i + 1, j)))
                        .collect();
                    (i + 1, ls)
                })
                .collect(),
        )
    }

    /// Parses `"1:l,l;2:s"`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut colors = Vec::new();
        for chunk in text.split(';') {
            let (color, lengths) = chunk
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("missing ':' in {chunk:?}")))?;
            let color: usize = color
                .parse()
                .map_err(|_| Error::Parse(format!("bad color {color:?}")))?;
            let lengths = lengths
                .split(',')
                .map(Length::parse)
                .collect::<Result<Vec<_>>>()?;
            colors.push((color, lengths));
        }
        Self::new(colors).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn colors(&self) -> &[(usize, Vec<Length>)] {
        &self.colors
    }

    pub fn k(&self) -> usize {
        self.colors.len()
    }

    /// All circles, color by color.
    pub fn circles(&self) -> Vec<Circle> {
        self.colors
            .iter()
            .flat_map(|(color, ls)| {
                ls.iter().enumerate().map(|(index, l)| Circle {
                    color: *color,
                    index,
                    length: l.clone(),
                })
            })
            .collect()
    }

    pub fn total_circles(&self) -> usize {
        self.colors.iter().map(|c| c.1.len()).sum()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.colors.iter().map(|c| c.1.len()).collect()
    }

    pub fn is_numeric(&self) -> bool {
        self.colors
            .iter()
            .flat_map(|c| &c.1)
            .all(|l| matches!(l, Length::Value(_)))
    }

    pub fn is_symbolic(&self) -> bool {
        self.colors
            .iter()
            .flat_map(|c| &c.1)
            .all(|l| matches!(l, Length::Symbol(_)))
    }

    /// `l_i`, the total length of one color.
    pub fn color_length(&self, position: usize) -> Polynomial {
        self.colors[position]
            .1
            .iter()
            .map(Length::to_polynomial)
            .sum()
    }

    /// `l`, the total length of all circles.
    pub fn total_length(&self) -> Polynomial {
        (0..self.k()).map(|i| self.color_length(i)).sum()
    }
}

impl fmt::Display for CircleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self
            .colors
            .iter()
            .map(|(c, ls)| {
                format!(
                    "{c}:{}",
                    ls.iter()
                        .map(|l| l.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                )
            })
            .collect();
        write!(f, "{}", body.join(";"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat;

    #[test]
    fn parse_forms() {
        let c = CircleSet::parse("1:l,l;2:s").unwrap();
        assert_eq!(c.multiplicities(), vec![2, 1]);
        assert_eq!(c.total_length().to_string(), "2*l + s");
        let c = CircleSet::parse("2:3/2;1:1").unwrap();
        assert_eq!(c.colors()[1].1[0], Length::Value(rat(3, 2)));
        assert_eq!(c.to_string(), "1:1/1;2:3/2");
        for bad in ["1:", "1:L", "x:1", "1:0", "1:1;1:2", "1:2a", "0:1"] {
            assert!(CircleSet::parse(bad).is_err(), "{bad:?}");
        }
    }

    #[test]
    fn symbolic_names() {
        let c = CircleSet::symbolic(&[2, 1]).unwrap();
        assert_eq!(c.total_length().to_string(), "l_1_1 + l_1_2 + l_2_1");
    }
}

//! Element literals such as `1 - e1 + 2e3`, `1/4e2` or `0.5 + e1`.
//!
//! ```text
//! expr  := sign? term (('+' | '-') term)*
//! term  := coeff | coeff? basis
//! coeff := integer | integer '/' positive-integer | decimal
//! basis := 'e1' | 'e2' | 'e3'
//! ```
//!
//! Whitespace is ignored and repeated basis terms add up.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::element::Cl2Element;

/// Parse failure with the 1-based character column where it was detected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

struct Lexer {
    chars: Vec<(usize, char)>,
    pos: usize,
    len: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        let chars: Vec<(usize, char)> = src
            .chars()
            .enumerate()
            .filter(|(_, c)| !c.is_whitespace())
            .map(|(i, c)| (i + 1, c))
            .collect();
        Lexer {
            len: src.chars().count(),
            chars,
            pos: 0,
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn column(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len + 1, |&(i, _)| i)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        self.pos += 1;
        c
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError {
            column: self.column(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> String {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.pos += 1;
        }
        s
    }

    fn coeff(&mut self) -> Result<Option<BigRational>, ParseError> {
        let whole = self.digits();
        if whole.is_empty() {
            if self.peek() == Some('.') {
                return self.error("expected digits before '.'");
            }
            return Ok(None);
        }
        let int: BigInt = whole.parse().expect("ascii digits");
        match self.peek() {
            Some('/') => {
                self.pos += 1;
                let col = self.column();
                let den = self.digits();
                if den.is_empty() {
                    return self.error("expected a denominator after '/'");
                }
                let den: BigInt = den.parse().expect("ascii digits");
                if den.is_zero() {
                    return Err(ParseError {
                        column: col,
                        message: "denominator must be positive".into(),
                    });
                }
                Ok(Some(BigRational::new(int, den)))
            }
            Some('.') => {
                self.pos += 1;
                let frac = self.digits();
                if frac.is_empty() {
                    return self.error("expected digits after '.'");
                }
                let scale = num_traits::pow(BigInt::from(10u32), frac.len());
                let frac: BigInt = frac.parse().expect("ascii digits");
                Ok(Some(BigRational::new(int * &scale + frac, scale)))
            }
            _ => Ok(Some(BigRational::from_integer(int))),
        }
    }

    fn basis(&mut self) -> Result<Option<usize>, ParseError> {
        if self.peek() != Some('e') {
            return Ok(None);
        }
        self.pos += 1;
        match self.peek() {
            Some(c @ '1'..='3') => {
                self.pos += 1;
                Ok(Some(c as usize - '0' as usize))
            }
            _ => self.error("expected basis e1, e2 or e3"),
        }
    }
}

pub fn parse_element(src: &str) -> Result<Cl2Element, ParseError> {
    let mut lx = Lexer::new(src);
    if lx.peek().is_none() {
        return lx.error("empty literal");
    }
    let mut acc: [BigRational; 4] = Default::default();
    let mut negative = match lx.peek() {
        Some('-') => {
            lx.bump();
            true
        }
        Some('+') => {
            lx.bump();
            false
        }
        _ => false,
    };
    loop {
        let coeff = lx.coeff()?;
        let basis = lx.basis()?;
        let (value, idx) = match (coeff, basis) {
            (None, None) => return lx.error("expected a number or e1, e2, e3"),
            (c, b) => (c.unwrap_or_else(BigRational::one), b.unwrap_or(0)),
        };
        if negative {
            acc[idx] -= value;
        } else {
            acc[idx] += value;
        }
        match lx.bump() {
            None => break,
            Some('+') => negative = false,
            Some('-') => negative = true,
            Some(c) => {
                lx.pos -= 1;
                return lx.error(format!("unexpected '{c}'"));
            }
        }
    }
    Ok(Cl2Element::from_rationals(acc))
}

//! Text grammars for monomials, monomial ideals and polynomials.
//!
//! Generators are separated by commas, semicolons or newlines; `#` starts a
//! comment that runs to the end of the line. Terms are products of integer
//! coefficients and factors `x<i>` or `x<i>^<e>`, joined by `*` (optional),
//! for example `x1^3 + 2*x2*x3^2 - x3^3`.

use crate::groebner::{PrimeField, Polynomial};
use crate::ideal::MonomialIdeal;
use crate::monomial::{check_nvars, Monomial, TermOrder};
use crate::{Error, Result};

/// Parsed input routed either to the monomial pipeline or to Gröbner bases.
#[derive(Clone, Debug)]
pub enum ParsedIdeal {
    Monomial(MonomialIdeal),
    Polynomials(Vec<Polynomial>),
}

#[derive(Clone, Debug)]
struct RawTerm {
    negative: bool,
    coefficients: Vec<String>,
    exponents: Vec<u32>,
    line: usize,
    column: usize,
}

impl RawTerm {
    fn is_plain_monomial(&self) -> bool {
        !self.negative && self.coefficients.iter().all(|c| c.trim_start_matches('0') == "1")
    }
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    nvars: usize,
}

impl Cursor {
    fn new(text: &str, nvars: usize) -> Self {
        Cursor {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            nvars,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips blanks and comments, but not newlines.
    fn skip_inline(&mut self) {
        while let Some(c) = self.peek() {
            match c {
                ' ' | '\t' | '\r' => {
                    self.bump();
                }
                '#' => {
                    while self.peek().is_some_and(|c| c != '\n') {
                        self.bump();
                    }
                }
                _ => break,
            }
        }
    }

    fn skip_separators(&mut self) {
        loop {
            self.skip_inline();
            match self.peek() {
                Some(',' | ';' | '\n') => {
                    self.bump();
                }
                _ => break,
            }
        }
    }

    fn digits(&mut self) -> Option<String> {
        let mut s = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            s.push(c);
            self.bump();
        }
        (!s.is_empty()).then_some(s)
    }

    fn small_number(&mut self, what: &str) -> Result<u32> {
        let (line, column) = (self.line, self.column);
        let s = self
            .digits()
            .ok_or_else(|| self.error(format!("expected {what}")))?;
        s.parse::<u32>().map_err(|_| Error::Parse {
            line,
            column,
            message: format!("{what} {s} is too large"),
        })
    }

    fn term(&mut self, negative: bool) -> Result<RawTerm> {
        self.skip_inline();
        let mut term = RawTerm {
            negative,
            coefficients: Vec::new(),
            exponents: vec![0; self.nvars],
            line: self.line,
            column: self.column,
        };
        let mut factors = 0;
        loop {
            self.skip_inline();
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    term.coefficients.push(self.digits().unwrap());
                }
                Some('x' | 'X') => {
                    self.bump();
                    let index = self.small_number("variable index")? as usize;
                    if index == 0 {
                        return Err(self.error("variables are numbered from x1"));
                    }
                    if index > self.nvars {
                        return Err(Error::VariableRange {
                            index,
                            nvars: self.nvars,
                        });
                    }
                    self.skip_inline();
                    let e = if self.peek() == Some('^') {
                        self.bump();
                        self.skip_inline();
                        self.small_number("exponent")?
                    } else {
                        1
                    };
                    term.exponents[index - 1] = term.exponents[index - 1].saturating_add(e);
                }
                Some(c) => {
                    return Err(self.error(format!("unexpected character {c:?}")));
                }
                None => return Err(self.error("unexpected end of input")),
            }
            factors += 1;
            self.skip_inline();
            match self.peek() {
                Some('*') => {
                    self.bump();
                }
                Some(c) if c.is_ascii_digit() || c == 'x' || c == 'X' => {}
                _ => break,
            }
        }
        debug_assert!(factors > 0);
        Ok(term)
    }

    /// One generator: a signed sum of terms.
    fn generator(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        self.skip_inline();
        let mut negative = false;
        if let Some(c @ ('+' | '-')) = self.peek() {
            negative = c == '-';
            self.bump();
        }
        terms.push(self.term(negative)?);
        loop {
            self.skip_inline();
            match self.peek() {
                Some(c @ ('+' | '-')) => {
                    self.bump();
                    terms.push(self.term(c == '-')?);
                }
                None | Some(',' | ';' | '\n') => return Ok(terms),
                Some(c) => return Err(self.error(format!("unexpected character {c:?}"))),
            }
        }
    }

    fn generators(&mut self) -> Result<Vec<Vec<RawTerm>>> {
        let mut out = Vec::new();
        loop {
            self.skip_separators();
            if self.peek().is_none() {
                return Ok(out);
            }
            out.push(self.generator()?);
        }
    }
}

fn raw_generators(text: &str, nvars: usize) -> Result<Vec<Vec<RawTerm>>> {
    check_nvars(nvars)?;
    let gens = Cursor::new(text, nvars).generators()?;
    if gens.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no generators given".into(),
        });
    }
    Ok(gens)
}

fn raw_monomial(terms: &[RawTerm]) -> Result<Monomial> {
    match terms {
        [t] if t.is_plain_monomial() => Monomial::new(&t.exponents),
        _ => {
            let t = &terms[0];
            Err(Error::Parse {
                line: t.line,
                column: t.column,
                message: "expected a monomial with coefficient 1".into(),
            })
        }
    }
}

fn raw_polynomial(terms: &[RawTerm], nvars: usize, field: PrimeField) -> Result<Polynomial> {
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let mut c = 1;
        for digits in &t.coefficients {
            c = field.mul(c, field.from_decimal(digits, false));
        }
        if t.negative {
            c = field.neg(c);
        }
        out.push((Monomial::new(&t.exponents)?, c));
    }
    Ok(Polynomial::from_terms(nvars, field, TermOrder::Grevlex, out))
}

/// Parses a single monomial such as `x1^2*x3` or `1`.
pub fn parse_monomial(text: &str, nvars: usize) -> Result<Monomial> {
    let gens = raw_generators(text, nvars)?;
    if gens.len() != 1 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected exactly one monomial".into(),
        });
    }
    raw_monomial(&gens[0])
}

/// Parses a list of monomials and returns the ideal they generate, minimalized.
pub fn parse_monomial_ideal(text: &str, nvars: usize) -> Result<MonomialIdeal> {
    let gens = raw_generators(text, nvars)?;
    let monomials = gens.iter().map(|g| raw_monomial(g)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::minimalize(nvars, monomials)
}

/// Parses a single polynomial; coefficients are reduced modulo the field prime.
pub fn parse_polynomial(text: &str, nvars: usize, field: PrimeField) -> Result<Polynomial> {
    let gens = raw_generators(text, nvars)?;
    if gens.len() != 1 {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "expected exactly one polynomial".into(),
        });
    }
    raw_polynomial(&gens[0], nvars, field)
}

/// Parses a list of polynomials. Generators that reduce to zero are dropped.
pub fn parse_polynomials(text: &str, nvars: usize, field: PrimeField) -> Result<Vec<Polynomial>> {
    let gens = raw_generators(text, nvars)?;
    let mut out = Vec::with_capacity(gens.len());
    for g in &gens {
        let p = raw_polynomial(g, nvars, field)?;
        if !p.is_zero() {
            out.push(p);
        }
    }
    if out.is_empty() {
        return Err(Error::Argument("every generator is zero".into()));
    }
    Ok(out)
}

/// Routes monomial input to [`MonomialIdeal`] and anything else to polynomials.
pub fn parse_ideal(text: &str, nvars: usize, field: PrimeField) -> Result<ParsedIdeal> {
    let gens = raw_generators(text, nvars)?;
    if gens.iter().all(|g| g.len() == 1 && g[0].is_plain_monomial()) {
        let monomials = gens.iter().map(|g| raw_monomial(g)).collect::<Result<Vec<_>>>()?;
        return Ok(ParsedIdeal::Monomial(MonomialIdeal::minimalize(nvars, monomials)?));
    }
    parse_polynomials(text, nvars, field).map(ParsedIdeal::Polynomials)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_ideal_is_minimalized() {
        let i = parse_monomial_ideal("x1^2, x1*x2, x1^2*x3", 3).unwrap();
        assert_eq!(i.to_string(), "x1^2, x1*x2");
    }

    #[test]
    fn juxtaposition_and_whitespace() {
        let a = parse_monomial("x1 x2^2", 3).unwrap();
        let b = parse_monomial("x1*x2 ^ 2", 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(parse_monomial("1", 2).unwrap(), Monomial::one(2));
    }

    #[test]
    fn polynomial_routing() {
        let f = PrimeField::default();
        match parse_ideal("x1^3 + x2^3 + x3^3", 3, f).unwrap() {
            ParsedIdeal::Polynomials(p) => assert_eq!(p[0].to_string(), "x1^3 + x2^3 + x3^3"),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_ideal("x1^2, x1*x2", 3, f).unwrap(),
            ParsedIdeal::Monomial(_)
        ));
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let f = PrimeField::new(7).unwrap();
        let p = parse_polynomial("9*x1 - 2*3*x2 + 7*x3", 3, f).unwrap();
        assert_eq!(p.to_string(), "2*x1 + x2");
    }

    #[test]
    fn variable_out_of_range() {
        let err = parse_monomial_ideal("x9", 3).unwrap_err();
        assert_eq!(err, Error::VariableRange { index: 9, nvars: 3 });
        assert_eq!(err.class(), "variable-range");
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_monomial_ideal("x1^2,\n  x2 $ x3", 3).unwrap_err();
        match err {
            Error::Parse { line, column, .. } => assert_eq!((line, column), (2, 6)),
            other => panic!("{other:?}"),
        }
        assert!(parse_monomial_ideal("2*x1", 2).is_err());
        assert!(parse_monomial_ideal("x0", 2).is_err());
        assert!(parse_monomial_ideal("", 2).is_err());
    }

    #[test]
    fn files_with_comments() {
        let text = "# generators\nx1^2   # first\nx2^2\n\nx3^2\n";
        assert_eq!(parse_monomial_ideal(text, 3).unwrap().generators().len(), 3);
    }
}

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};

use super::exponent::ExponentVector;
use super::poly::Polynomial;

/// Writes one signed additive term: the sign separator (a bare `-` when
/// leading), then the coefficient magnitude and factor text under the shared
/// conventions — magnitude 1 elided unless the factors are empty. Used by
/// both the polynomial and the operator display.
pub(crate) fn write_signed_term(
    f: &mut fmt::Formatter<'_>,
    coeff: &BigRational,
    factors: &str,
    first: bool,
) -> fmt::Result {
    let neg = coeff.is_negative();
    let mag = coeff.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    if factors.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{factors}")
    } else {
        write!(f, "{mag}*{factors}")
    }
}

/// Text form of a rational polynomial: terms in descending graded-lex order,
/// e.g. `-3/2*x1^2*x2 + x3`.
impl fmt::Display for Polynomial<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().rev().enumerate() {
            let factors = if e.total_degree() == 0 { String::new() } else { e.to_string() };
            write_signed_term(f, c, &factors, i == 0)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Token {
    Plus,
    Minus,
    Star,
    Caret,
    Number(String),
    /// Variable with 1-based index; the letter is 'x' for polynomials and
    /// 'd' for derivative factors in the operator grammar.
    Symbol(char, usize),
}

pub(crate) fn tokenize(input: &str, symbols: &[char]) -> Result<Vec<Token>> {
    let bytes: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1;
            }
            '-' => {
                out.push(Token::Minus);
                i += 1;
            }
            '*' => {
                out.push(Token::Star);
                i += 1;
            }
            '^' => {
                out.push(Token::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                // optional /denominator
                if i < bytes.len() && bytes[i] == '/' {
                    i += 1;
                    let denom_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == denom_start {
                        return Err(Error::Parse(format!(
                            "expected digits after '/' in {:?}",
                            &input[start..]
                        )));
                    }
                }
                out.push(Token::Number(bytes[start..i].iter().collect()));
            }
            _ if symbols.contains(&c) => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == start {
                    return Err(Error::Parse(format!("expected an index after '{c}'")));
                }
                let idx: usize = bytes[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad index after '{c}'")))?;
                out.push(Token::Symbol(c, idx));
            }
            other => {
                return Err(Error::Parse(format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(out)
}

pub(crate) fn parse_number(text: &str) -> Result<BigRational> {
    BigRational::from_str(text).map_err(|e| Error::Parse(format!("bad rational '{text}': {e}")))
}

/// One additive term: signed coefficient and, per symbol letter, an exponent
/// vector. Shared by the polynomial grammar (letter 'x') and the operator
/// grammar (letters 'x' and 'd').
pub(crate) struct ParsedTerm {
    pub coeff: BigRational,
    pub exps: Vec<Vec<u32>>, // one vector per symbol letter
}

/// Parses `sign? factor (* factor)*` sequences separated by +/-.
pub(crate) fn parse_terms(
    n: usize,
    tokens: &[Token],
    symbols: &[char],
) -> Result<Vec<ParsedTerm>> {
    let mut terms = Vec::new();
    let mut pos = 0;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    while pos < tokens.len() {
        // sign
        let mut sign = BigRational::one();
        loop {
            match tokens.get(pos) {
                Some(Token::Plus) => pos += 1,
                Some(Token::Minus) => {
                    sign = -sign;
                    pos += 1;
                }
                _ => break,
            }
        }
        // factors
        let mut coeff = sign;
        let mut exps = vec![vec![0u32; n]; symbols.len()];
        loop {
            match tokens.get(pos) {
                Some(Token::Number(text)) => {
                    coeff *= parse_number(text)?;
                    pos += 1;
                }
                Some(Token::Symbol(letter, idx)) => {
                    let slot = symbols.iter().position(|s| s == letter).unwrap();
                    if *idx == 0 || *idx > n {
                        return Err(Error::Parse(format!(
                            "{letter}{idx} out of range 1..={n}"
                        )));
                    }
                    pos += 1;
                    let mut power: u32 = 1;
                    if let Some(Token::Caret) = tokens.get(pos) {
                        pos += 1;
                        match tokens.get(pos) {
                            Some(Token::Number(text)) if !text.contains('/') => {
                                power = text.parse().map_err(|_| {
                                    Error::Parse(format!("bad exponent '{text}'"))
                                })?;
                                pos += 1;
                            }
                            other => {
                                return Err(Error::Parse(format!(
                                    "expected integer exponent after '^', got {other:?}"
                                )));
                            }
                        }
                    }
                    exps[slot][*idx - 1] += power;
                }
                other => {
                    return Err(Error::Parse(format!(
                        "expected a coefficient or symbol, got {other:?}"
                    )));
                }
            }
            if let Some(Token::Star) = tokens.get(pos) {
                pos += 1;
                continue;
            }
            break;
        }
        terms.push(ParsedTerm { coeff, exps });
    }
    Ok(terms)
}

/// Tokenizes and parses a multi-symbol term grammar in one call; the
/// operator parser drives this with letters `x` and `d`.
pub(crate) fn parse_symbol_terms(
    n: usize,
    input: &str,
    symbols: &[char],
) -> Result<Vec<ParsedTerm>> {
    let tokens = tokenize(input, symbols)?;
    parse_terms(n, &tokens, symbols)
}

/// Parses the polynomial text grammar (`-3/2*x1^2*x2 + x3`) in an ambient of
/// n variables.
pub fn parse_polynomial(n: usize, input: &str) -> Result<Polynomial<BigRational>> {
    let tokens = tokenize(input, &['x'])?;
    let terms = parse_terms(n, &tokens, &['x'])?;
    Ok(Polynomial::from_terms(
        n,
        terms
            .into_iter()
            .map(|t| (ExponentVector::new(t.exps[0].clone()), t.coeff)),
    ))
}

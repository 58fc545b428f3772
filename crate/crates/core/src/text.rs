//! Parsing for the canonical `3*L^2*s1 - u*v + 1` style renderings.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// One parsed summand: an integer coefficient and its `(variable, power)` factors.
pub(crate) type ParsedTerm = (BigInt, Vec<(String, u32)>);

pub(crate) fn parse_sum(input: &str) -> Result<Vec<ParsedTerm>> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut rest = s.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' if !first => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            c => return Err(Error::Parse(format!("unexpected '{}'", c as char))),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let (body, tail) = rest.split_at(end);
        let (mut coeff, factors) = parse_product(body)?;
        if negative {
            coeff = -coeff;
        }
        terms.push((coeff, factors));
        rest = tail;
    }
    Ok(terms)
}

fn parse_product(body: &str) -> Result<ParsedTerm> {
    if body.is_empty() {
        return Err(Error::Parse("empty term".into()));
    }
    let mut coeff = BigInt::one();
    let mut factors = Vec::new();
    for factor in body.split('*') {
        if factor.is_empty() {
            return Err(Error::Parse(format!("empty factor in '{body}'")));
        }
        if factor.bytes().all(|b| b.is_ascii_digit()) {
            let n: BigInt = factor
                .parse()
                .map_err(|_| Error::Parse(format!("bad integer '{factor}'")))?;
            coeff *= n;
            continue;
        }
        let (name, power) = match factor.split_once('^') {
            Some((name, p)) => {
                let p: u32 = p
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad exponent in '{factor}'")))?;
                (name, p)
            }
            None => (factor, 1),
        };
        if name.is_empty() || !name.bytes().all(|b| b.is_ascii_alphanumeric()) {
            return Err(Error::Parse(format!("bad variable '{name}'")));
        }
        factors.push((name.to_string(), power));
    }
    Ok((coeff, factors))
}

pub(crate) fn power_str(name: &str, power: u32) -> String {
    if power == 1 {
        name.to_string()
    } else {
        format!("{name}^{power}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_signed_terms() {
        let t = parse_sum("1 - u - v + 3*u*v^2").unwrap();
        assert_eq!(t.len(), 4);
        assert_eq!(t[1].0, BigInt::from(-1));
        assert_eq!(t[3].0, BigInt::from(3));
        assert_eq!(t[3].1, vec![("u".into(), 1), ("v".into(), 2)]);
    }

    #[test]
    fn leading_minus_and_errors() {
        assert_eq!(parse_sum("-2").unwrap()[0].0, BigInt::from(-2));
        assert!(parse_sum("").is_err());
        assert!(parse_sum("1 + ").is_err());
        assert!(parse_sum("u^x").is_err());
    }
}

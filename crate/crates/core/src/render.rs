//! Textual forms: value rendering, structure rendering, literal parsing.
//!
//! Value rendering (`Display`) shows what an infon *amounts to*:
//! `value_extent` for finite orders (`12_20`), the bare value for unbounded
//! ones (`12`, `11/2`), and `1_1` for every order-1 infon. Structure
//! rendering shows how it is *built*: `(3_4 * 4_5)`. Two infons can render
//! identically in value form and still be different objects; structure form
//! exists so tools can talk about the difference.

use std::fmt;

use num_traits::One;

use crate::error::Result;
use crate::infon::{Infon, JoinClass};
use crate::join::{new_atom, null_infon};
use crate::order::Order;
use crate::scalar::{from_u8, Int, Rational};
use crate::tag::Universe;

/// Render an exact rational: bare numerator when integral, `p/q` otherwise.
pub fn ratio_string<T: Int>(r: &Rational<T>) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl<T: Int> fmt::Display for Infon<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.order() {
            // entwined structures have no value form; show the structure
            Err(_) => write!(f, "{}", self.structure_string()),
            Ok(o) => {
                if o.is_unit() {
                    return write!(f, "1_1");
                }
                let v = self.value().expect("an order implies a value");
                match o {
                    Order::Finite(e) => {
                        write!(f, "{}_{}", ratio_string(v), ratio_string(e))
                    }
                    Order::Unbounded => write!(f, "{}", ratio_string(v)),
                }
            }
        }
    }
}

impl<T: Int> Infon<T> {
    /// Structural rendering: atoms in value form, joins as parenthesized
    /// operand lists with `*`/`/` (multiplicative), `+`/`-` (additive), or
    /// `~` (entwined) between them. Inverse-only leading operands render
    /// against the class identity: `(1 / x)`, `(0 - x)`.
    pub fn structure_string(&self) -> String {
        match self {
            Infon::Atom(_) => self.to_string(),
            Infon::Join(j) => {
                let mut s = String::from("(");
                for (i, op) in j.operands.iter().enumerate() {
                    let body = op.infon.structure_string();
                    if i == 0 {
                        if op.inverted {
                            match j.class {
                                JoinClass::Multiplicative => s.push_str("1 / "),
                                JoinClass::Additive => s.push_str("0 - "),
                                JoinClass::Entwined => {}
                            }
                        }
                    } else {
                        let sep = match (j.class, op.inverted) {
                            (JoinClass::Multiplicative, false) => " * ",
                            (JoinClass::Multiplicative, true) => " / ",
                            (JoinClass::Additive, false) => " + ",
                            (JoinClass::Additive, true) => " - ",
                            (JoinClass::Entwined, _) => " ~ ",
                        };
                        s.push_str(sep);
                    }
                    s.push_str(&body);
                }
                s.push(')');
                s
            }
        }
    }
}

/// Parse a non-negative decimal digit string into `T` by digit folding.
fn parse_uint<T: Int>(digits: &str) -> Option<T> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let ten = from_u8::<T>(10);
    let mut acc = T::zero();
    for b in digits.bytes() {
        acc = acc * ten.clone() + T::from_u8(b - b'0')?;
    }
    Some(acc)
}

/// Parse a number in any of the literal spellings: `12`, `11/2`, `5.5`,
/// each with an optional leading `-`.
pub fn parse_number<T: Int>(text: &str) -> Option<Rational<T>> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let value = if let Some((n, d)) = body.split_once('/') {
        let numer = parse_uint::<T>(n)?;
        let denom = parse_uint::<T>(d)?;
        if denom.is_zero() {
            return None;
        }
        Rational::new(numer, denom)
    } else if let Some((ip, fp)) = body.split_once('.') {
        let int_part = parse_uint::<T>(ip)?;
        let frac_digits = parse_uint::<T>(fp)?;
        let mut scale = T::one();
        let ten = from_u8::<T>(10);
        for _ in 0..fp.len() {
            scale = scale * ten.clone();
        }
        Rational::from_integer(int_part) + Rational::new(frac_digits, scale)
    } else {
        Rational::from_integer(parse_uint::<T>(body)?)
    };
    Some(if negative { -value } else { value })
}

/// Parse a complete infon literal: `value` or `value_extent`.
/// No underscore means an unbounded order.
pub fn parse_infon_literal<T: Int>(text: &str) -> Option<(Rational<T>, Order<T>)> {
    match text.split_once('_') {
        None => Some((parse_number(text)?, Order::Unbounded)),
        Some((v, e)) => {
            let value = parse_number(v)?;
            let extent = parse_number(e)?;
            Some((value, Order::Finite(extent)))
        }
    }
}

/// Turn a parsed literal into an infon. The literal `1_1` denotes the null
/// infon itself; every other spelling mints a fresh atom (validated).
pub fn infon_from_literal<T: Int>(
    universe: &mut Universe,
    value: Rational<T>,
    order: Order<T>,
) -> Result<Infon<T>> {
    if order.is_unit() && value.is_one() {
        return Ok(null_infon());
    }
    new_atom(universe, value, order)
}

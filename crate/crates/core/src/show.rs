//! Human-readable rendering with basis labels.

use num_traits::{One, Signed};

use crate::envelope::BimoduleElement;
use crate::linear::{LinComb, Vector};
use crate::pbw::{Monomial, UeaElement};
use crate::scalar::format_rational;

/// `x^2*y`, or `1` for the empty monomial.
pub fn monomial(m: &Monomial, names: &[String]) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                names[i].clone()
            } else {
                format!("{}^{e}", names[i])
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn terms<K: Ord + Clone>(c: &LinComb<K>, mut label: impl FnMut(&K) -> String) -> String {
    if c.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, q) in c {
        let l = label(k);
        let negative = q.is_negative();
        let abs = q.abs();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if abs.is_one() {
            out.push_str(&l);
        } else if l == "1" {
            out.push_str(&format_rational(&abs));
        } else {
            out.push_str(&format!("{} {l}", format_rational(&abs)));
        }
    }
    out
}

pub fn vector(v: &Vector, names: &[String]) -> String {
    terms(v, |i| names[*i].clone())
}

pub fn uea(u: &UeaElement, names: &[String]) -> String {
    terms(u, |m| monomial(m, names))
}

/// Terms `h ⊗ m` of the enveloping bimodule.
pub fn bimodule(b: &BimoduleElement, g_names: &[String], m_names: &[String]) -> String {
    terms(b, |(m, v)| {
        format!("{}⊗{}", monomial(m, g_names), m_names[*v])
    })
}

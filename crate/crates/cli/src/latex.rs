//! LaTeX rendering. Forests are written as parent vectors, words and
//! functions as image lists.

use chalg::algebra::BasisKey;
use chalg::bases::Basis;
use chalg::json::AnyElement;
use chalg::realization::{Letter, Side};
use chalg::{FreeElement, Int, Polynomial, TensorElement};

fn vector(text: &str) -> String {
    let parts: Vec<&str> = text.split_whitespace().collect();
    format!("({})", parts.join(","))
}

/// The LaTeX form of a key: parent vectors for forests, image lists
/// otherwise.
pub trait LatexKey {
    fn latex(&self) -> String;
}

impl LatexKey for chalg::OrderedForest {
    fn latex(&self) -> String {
        vector(&self.to_string())
    }
}

impl LatexKey for chalg::PlaneForest {
    fn latex(&self) -> String {
        self.to_ordered().latex()
    }
}

impl LatexKey for chalg::RootedForest {
    fn latex(&self) -> String {
        self.to_ordered().latex()
    }
}

impl LatexKey for chalg::PackedWord {
    fn latex(&self) -> String {
        vector(&self.to_string())
    }
}

impl LatexKey for chalg::Endofunction {
    fn latex(&self) -> String {
        vector(&self.to_string())
    }
}

impl LatexKey for chalg::Permutation {
    fn latex(&self) -> String {
        vector(&self.to_string())
    }
}

fn symbol(basis: Basis) -> &'static str {
    match basis {
        Basis::S => "\\mathbf{S}",
        Basis::R => "\\mathbf{R}",
        Basis::M => "\\mathbf{M}",
    }
}

fn basis_element<K: LatexKey + BasisKey>(basis: Basis, k: &K) -> String {
    if k.degree() == 0 {
        "1".to_string()
    } else {
        format!("{}^{{{}}}", symbol(basis), k.latex())
    }
}

/// Joins `(coefficient, monomial)` pairs into a signed sum.
fn sum<'a>(terms: impl Iterator<Item = (&'a Int, String)>) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        let negative = *c < Int::from(0);
        let abs = if negative { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        if m == "1" {
            out.push_str(&abs.to_string());
        } else {
            if abs != Int::from(1) {
                out.push_str(&abs.to_string());
                out.push(' ');
            }
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub fn element<K: LatexKey + BasisKey>(basis: Basis, x: &FreeElement<K, Int>) -> String {
    sum(x.iter().map(|(k, c)| (c, basis_element(basis, k))))
}

pub fn any_element(basis: Basis, x: &AnyElement) -> String {
    match x {
        AnyElement::Ck(x) => element(basis, x),
        AnyElement::Nck(x) => element(basis, x),
        AnyElement::Ho(x) => element(basis, x),
        AnyElement::Wqsym(x) => element(basis, x),
        AnyElement::Sgsym(x) => element(basis, x),
        AnyElement::Efsym(x) => element(basis, x),
    }
}

pub fn tensor<K: LatexKey + BasisKey>(basis: Basis, x: &TensorElement<K, Int>) -> String {
    sum(x.iter().map(|((a, b), c)| {
        (
            c,
            format!(
                "{} \\otimes {}",
                basis_element(basis, a),
                basis_element(basis, b)
            ),
        )
    }))
}

fn letter(l: &Letter) -> String {
    let name = match l.side {
        Side::A => 'a',
        Side::B => 'b',
    };
    format!("{name}_{{{},{}}}", l.i, l.j)
}

pub fn polynomial(p: &Polynomial) -> String {
    sum(p.iter().map(|(w, c)| {
        let m = if w.is_empty() {
            "1".to_string()
        } else {
            w.iter().map(letter).collect::<Vec<_>>().join(" ")
        };
        (c, m)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_and_units() {
        let x = FreeElement::from_terms([
            (
                "0 1".parse::<chalg::OrderedForest>().unwrap(),
                Int::from(-1),
            ),
            ("".parse().unwrap(), Int::from(3)),
        ]);
        assert_eq!(element(Basis::S, &x), "3 - \\mathbf{S}^{(0,1)}");
        assert_eq!(
            element::<chalg::OrderedForest>(Basis::R, &FreeElement::zero()),
            "0"
        );
    }
}

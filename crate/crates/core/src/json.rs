//! JSON interchange for elements, tensors and realized polynomials.
//!
//! An element is `{"algebra": tag, "basis": "S"|"R"|"M", "terms": [{"coeff":
//! "<decimal>", "key": "<text>"}]}`; a tensor uses `"left"` and `"right"`
//! in place of `"key"`. Terms come in the canonical key order.

use serde::{Deserialize, Serialize};

use crate::algebra::{AlgebraTag, BasisKey, FreeElement, TensorElement};
use crate::bases::Basis;
use crate::error::{Error, Result};
use crate::realization::{NCPolynomial, Side, Version};
use crate::structures::{
    Endofunction, OrderedForest, PackedWord, Permutation, PlaneForest, RootedForest,
};
use crate::Int;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub key: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub algebra: String,
    pub basis: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTerm {
    pub coeff: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorJson {
    pub algebra: String,
    pub basis: String,
    pub terms: Vec<TensorTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordTerm {
    pub coeff: String,
    /// Letters as `[side, i, j]`.
    pub word: Vec<(String, i32, i32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizationJson {
    pub version: String,
    #[serde(rename = "N")]
    pub n: i32,
    pub terms: Vec<WordTerm>,
}

fn parse_coeff(text: &str, term: usize) -> Result<Int> {
    text.trim().parse().map_err(|_| {
        Error::Json(format!(
            "term {term}: coefficient {text:?} is not an integer"
        ))
    })
}

fn parse_key<K: BasisKey>(text: &str, term: usize) -> Result<K> {
    text.parse()
        .map_err(|e| Error::Json(format!("term {term}: key {text:?}: {e}")))
}

pub fn element_to_json<K: BasisKey>(
    tag: AlgebraTag,
    basis: Basis,
    x: &FreeElement<K, Int>,
) -> ElementJson {
    ElementJson {
        algebra: tag.name().to_string(),
        basis: basis.to_string(),
        terms: x
            .iter()
            .map(|(k, c)| Term {
                coeff: c.to_string(),
                key: k.to_string(),
            })
            .collect(),
    }
}

pub fn element_from_json<K: BasisKey>(doc: &ElementJson) -> Result<FreeElement<K, Int>> {
    let mut out = FreeElement::zero();
    for (i, t) in doc.terms.iter().enumerate() {
        out.add_term(parse_key(&t.key, i)?, parse_coeff(&t.coeff, i)?);
    }
    Ok(out)
}

pub fn tensor_to_json<K: BasisKey>(
    tag: AlgebraTag,
    basis: Basis,
    x: &TensorElement<K, Int>,
) -> TensorJson {
    TensorJson {
        algebra: tag.name().to_string(),
        basis: basis.to_string(),
        terms: x
            .iter()
            .map(|((l, r), c)| TensorTerm {
                coeff: c.to_string(),
                left: l.to_string(),
                right: r.to_string(),
            })
            .collect(),
    }
}

pub fn tensor_from_json<K: BasisKey>(doc: &TensorJson) -> Result<TensorElement<K, Int>> {
    let mut out = FreeElement::zero();
    for (i, t) in doc.terms.iter().enumerate() {
        let key = (parse_key(&t.left, i)?, parse_key(&t.right, i)?);
        out.add_term(key, parse_coeff(&t.coeff, i)?);
    }
    Ok(out)
}

pub fn realization_to_json(version: Version, n: i32, p: &NCPolynomial<Int>) -> RealizationJson {
    RealizationJson {
        version: version.name().to_string(),
        n,
        terms: p
            .iter()
            .map(|(w, c)| WordTerm {
                coeff: c.to_string(),
                word: w
                    .iter()
                    .map(|l| {
                        let side = match l.side {
                            Side::A => "A",
                            Side::B => "B",
                        };
                        (side.to_string(), l.i, l.j)
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// An element of any of the six algebras, tagged by its algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyElement {
    Ck(FreeElement<RootedForest, Int>),
    Nck(FreeElement<PlaneForest, Int>),
    Ho(FreeElement<OrderedForest, Int>),
    Wqsym(FreeElement<PackedWord, Int>),
    Sgsym(FreeElement<Permutation, Int>),
    Efsym(FreeElement<Endofunction, Int>),
}

impl AnyElement {
    pub fn tag(&self) -> AlgebraTag {
        match self {
            AnyElement::Ck(_) => AlgebraTag::Ck,
            AnyElement::Nck(_) => AlgebraTag::Nck,
            AnyElement::Ho(_) => AlgebraTag::Ho,
            AnyElement::Wqsym(_) => AlgebraTag::Wqsym,
            AnyElement::Sgsym(_) => AlgebraTag::Sgsym,
            AnyElement::Efsym(_) => AlgebraTag::Efsym,
        }
    }

    pub fn to_json(&self, basis: Basis) -> ElementJson {
        let tag = self.tag();
        match self {
            AnyElement::Ck(x) => element_to_json(tag, basis, x),
            AnyElement::Nck(x) => element_to_json(tag, basis, x),
            AnyElement::Ho(x) => element_to_json(tag, basis, x),
            AnyElement::Wqsym(x) => element_to_json(tag, basis, x),
            AnyElement::Sgsym(x) => element_to_json(tag, basis, x),
            AnyElement::Efsym(x) => element_to_json(tag, basis, x),
        }
    }
}

/// A parsed element document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub basis: Basis,
    pub element: AnyElement,
}

impl Document {
    pub fn to_json(&self) -> ElementJson {
        self.element.to_json(self.basis)
    }

    pub fn to_string_pretty(&self) -> String {
        to_string_pretty(&self.to_json())
    }
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: ElementJson = serde_json::from_str(text)?;
    document_from_json(&doc)
}

pub fn document_from_json(doc: &ElementJson) -> Result<Document> {
    let tag: AlgebraTag = doc.algebra.parse()?;
    let basis: Basis = doc.basis.parse()?;
    let allowed = basis == Basis::natural(tag)
        || (basis == Basis::R
            && matches!(tag, AlgebraTag::Ho | AlgebraTag::Ck | AlgebraTag::Efsym));
    if !allowed {
        return Err(Error::Json(format!(
            "{tag} elements are not written in the {basis} basis"
        )));
    }
    let element = match tag {
        AlgebraTag::Ck => AnyElement::Ck(element_from_json(doc)?),
        AlgebraTag::Nck => AnyElement::Nck(element_from_json(doc)?),
        AlgebraTag::Ho => AnyElement::Ho(element_from_json(doc)?),
        AlgebraTag::Wqsym => AnyElement::Wqsym(element_from_json(doc)?),
        AlgebraTag::Sgsym => AnyElement::Sgsym(element_from_json(doc)?),
        AlgebraTag::Efsym => AnyElement::Efsym(element_from_json(doc)?),
    };
    Ok(Document { basis, element })
}

/// Pretty JSON with a trailing newline.
pub fn to_string_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

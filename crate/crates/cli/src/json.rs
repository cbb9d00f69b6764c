//! The JSON table format for Chern and Segre expansions.
//!
//! Schema:
//!
//! ```json
//! {"e": 2, "f": 3, "max_degree": 2, "kind": "chern",
//!  "terms": [{"lambda": [..], "mu": [..], "coeff": "int-string"}]}
//! ```
//!
//! Terms are sorted by `(|lambda| + |mu|, lambda, mu)` and coefficients
//! are decimal strings, so consumers never face 64-bit overflow.

use serde::{Deserialize, Serialize};

use ctp_core::tensor::{integer_string, SchurPairExpansion};

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct ExpansionTable {
    pub e: u32,
    pub f: u32,
    pub max_degree: u32,
    pub kind: String,
    pub terms: Vec<TermRecord>,
}

#[derive(Serialize, Deserialize, PartialEq, Eq, Debug, Clone)]
pub struct TermRecord {
    pub lambda: Vec<u32>,
    pub mu: Vec<u32>,
    pub coeff: String,
}

impl ExpansionTable {
    pub fn from_expansion(kind: &str, e: u32, f: u32, expansion: &SchurPairExpansion) -> Self {
        let terms = expansion
            .sorted_terms()
            .into_iter()
            .map(|(lambda, mu, coeff)| TermRecord {
                lambda: lambda.parts().to_vec(),
                mu: mu.parts().to_vec(),
                coeff: integer_string(coeff),
            })
            .collect();
        ExpansionTable { e, f, max_degree: expansion.max_degree(), kind: kind.into(), terms }
    }

    /// Canonical serialization; parsing and re-serializing is
    /// byte-identical.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("table serialization");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Tab-separated text rendering with a single header line.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "# kind={} e={} f={} max_degree={}\n",
            self.kind, self.e, self.f, self.max_degree
        );
        for term in &self.terms {
            let lambda: Vec<String> = term.lambda.iter().map(u32::to_string).collect();
            let mu: Vec<String> = term.mu.iter().map(u32::to_string).collect();
            out.push_str(&format!(
                "[{}]\t[{}]\t{}\n",
                lambda.join(","),
                mu.join(","),
                term.coeff
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ctp_core::tensor::Calculator;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let calc = Calculator::new();
        let expansion = calc.chern_expansion(2, 3, 3, false);
        let table = ExpansionTable::from_expansion("chern", 2, 3, &expansion);
        let rendered = table.to_json();
        let reparsed = ExpansionTable::from_json(&rendered).unwrap();
        assert_eq!(reparsed, table);
        assert_eq!(reparsed.to_json(), rendered);
    }

    #[test]
    fn term_order_is_graded() {
        let calc = Calculator::new();
        let expansion = calc.chern_expansion(2, 2, 2, false);
        let table = ExpansionTable::from_expansion("chern", 2, 2, &expansion);
        let degrees: Vec<u32> = table
            .terms
            .iter()
            .map(|t| t.lambda.iter().sum::<u32>() + t.mu.iter().sum::<u32>())
            .collect();
        let mut sorted = degrees.clone();
        sorted.sort_unstable();
        assert_eq!(degrees, sorted);
        assert_eq!(table.terms[0].coeff, "1");
    }
}

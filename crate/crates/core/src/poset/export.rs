//! DOT and JSON encodings of a poset.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::{GapPoset, PosetId};
use crate::error::{Error, Result};

/// `{"s":..,"t":..,"elements":[..],"covers":{"x":[y,..]}}`, plus
/// `"truncate_k"` for truncated posets. Cover keys appear in numeric order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetJson {
    pub s: u64,
    pub t: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncate_k: Option<u64>,
    pub elements: Vec<u64>,
    #[serde(serialize_with = "covers_in_numeric_order")]
    pub covers: BTreeMap<String, Vec<u64>>,
}

fn covers_in_numeric_order<S: Serializer>(
    covers: &BTreeMap<String, Vec<u64>>,
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    let mut entries: Vec<(&String, &Vec<u64>)> = covers.iter().collect();
    entries.sort_by_key(|(k, _)| (k.len(), k.as_str()));
    let mut map = ser.serialize_map(Some(entries.len()))?;
    for (k, v) in entries {
        map.serialize_entry(k, v)?;
    }
    map.end()
}

impl GapPoset {
    pub fn to_json(&self) -> PosetJson {
        PosetJson {
            s: self.id.s,
            t: self.id.t,
            truncate_k: self.id.truncate_k,
            elements: self.elements.clone(),
            covers: self
                .elements
                .iter()
                .map(|&v| (v.to_string(), self.covered_by(v)))
                .collect(),
        }
    }

    /// Rebuilds the poset from its parameters and checks the payload matches.
    pub fn from_json(json: &PosetJson) -> Result<Self> {
        let poset = match json.truncate_k {
            Some(k) => {
                if PosetId::truncated(k)
                    != (PosetId {
                        s: json.s,
                        t: json.t,
                        truncate_k: Some(k),
                    })
                {
                    return Err(Error::InvalidParameter(format!(
                        "truncate_k = {k} requires s = {}, t = {}",
                        2 * k + 1,
                        2 * k + 3
                    )));
                }
                GapPoset::truncated(k)?
            }
            None => GapPoset::new(json.s, json.t)?,
        };
        if poset.to_json() != *json {
            return Err(Error::InvalidParameter(format!(
                "payload does not describe {}",
                poset.id
            )));
        }
        Ok(poset)
    }

    /// Graphviz rendering of the Hasse diagram, lower ranks at the bottom.
    pub fn to_dot(&self) -> String {
        let name = match self.id.truncate_k {
            Some(_) => format!("M_{}_{}", self.id.s, self.id.t),
            None => format!("P_{}_{}", self.id.s, self.id.t),
        };
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        out.push_str("  rankdir=BT;\n");
        out.push_str("  node [shape=plaintext];\n");
        out.push_str("  edge [arrowhead=none];\n");
        for rank in 0..=self.max_rank() {
            let row: Vec<String> = self
                .elements
                .iter()
                .zip(&self.ranks)
                .filter(|(_, &r)| r == rank)
                .map(|(v, _)| v.to_string())
                .collect();
            if !row.is_empty() {
                let _ = writeln!(out, "  {{ rank=same; {}; }}", row.join("; "));
            }
        }
        for (i, &x) in self.elements.iter().enumerate() {
            for &j in &self.covers[i] {
                let _ = writeln!(out, "  {} -> {};", self.elements[j], x);
            }
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let p = GapPoset::new(3, 5).unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"s":3,"t":5,"elements":[1,2,4,7],"covers":{"1":[],"2":[],"4":[1],"7":[2,4]}}"#
        );
    }

    #[test]
    fn json_round_trips() {
        for poset in [
            GapPoset::new(7, 8).unwrap(),
            GapPoset::new(5, 12).unwrap(),
            GapPoset::truncated(4).unwrap(),
        ] {
            let text = serde_json::to_string(&poset.to_json()).unwrap();
            let back: PosetJson = serde_json::from_str(&text).unwrap();
            assert_eq!(GapPoset::from_json(&back).unwrap(), poset);
        }
        let mut bad = GapPoset::new(3, 5).unwrap().to_json();
        bad.elements.push(8);
        assert!(GapPoset::from_json(&bad).is_err());
    }

    #[test]
    fn dot_layers_and_edges() {
        let dot = GapPoset::new(3, 5).unwrap().to_dot();
        assert!(dot.starts_with("digraph P_3_5 {"));
        assert!(dot.contains("{ rank=same; 1; 2; }"));
        assert!(dot.contains("{ rank=same; 4; }"));
        assert!(dot.contains("{ rank=same; 7; }"));
        for edge in ["1 -> 4;", "2 -> 7;", "4 -> 7;"] {
            assert!(dot.contains(edge), "{edge}");
        }
        assert_eq!(dot.matches("->").count(), 3);
    }
}

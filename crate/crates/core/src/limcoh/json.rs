use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::diagram::AbDiagram;
use crate::error::{Error, Result};
use crate::fincat::{builtin, CategoryDocument, FinCat};
use crate::homology::{FGAbGroup, IntMatrix};
use crate::limits::Limits;

/// A category given by builtin name or in full.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CategorySpec {
    Builtin(String),
    Explicit(CategoryDocument),
}

impl CategorySpec {
    pub fn build(&self, limits: &Limits) -> Result<FinCat> {
        match self {
            CategorySpec::Builtin(name) => builtin(name),
            CategorySpec::Explicit(doc) => doc.to_category(limits),
        }
    }
}

/// The value at an object: a group in canonical form (generators ordered
/// torsion first, then free) or explicit generator orders, 0 meaning free.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ValueSpec {
    Orders { orders: Vec<i64> },
    Group(FGAbGroup),
}

impl ValueSpec {
    fn orders(&self) -> Vec<BigInt> {
        match self {
            ValueSpec::Orders { orders } => orders.iter().map(|&o| BigInt::from(o)).collect(),
            ValueSpec::Group(g) => g.generator_orders(),
        }
    }
}

/// JSON form of a diagram.
///
/// Either `constant` gives the same group everywhere with identity maps, or
/// `objects` assigns values by object name and `morphisms` assigns matrices
/// (lists of rows, one row per target generator) by morphism name.
/// Identities may be omitted.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DiagramDocument {
    pub category: CategorySpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub constant: Option<FGAbGroup>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub objects: BTreeMap<String, ValueSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub morphisms: BTreeMap<String, Vec<Vec<i64>>>,
}

impl DiagramDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn to_diagram(&self, limits: &Limits) -> Result<AbDiagram> {
        let base = Arc::new(self.category.build(limits)?);
        if let Some(a) = &self.constant {
            if !self.objects.is_empty() || !self.morphisms.is_empty() {
                return Err(Error::Input(
                    "a constant diagram takes no object or morphism entries".into(),
                ));
            }
            return Ok(AbDiagram::constant(base, a));
        }
        for name in self.objects.keys() {
            if base.object_index(name).is_none() {
                return Err(Error::Input(format!("unknown object `{name}` in diagram")));
            }
        }
        for name in self.morphisms.keys() {
            if base.morphism_index(name).is_none() {
                return Err(Error::Input(format!(
                    "unknown morphism `{name}` in diagram"
                )));
            }
        }
        let orders: Vec<Vec<BigInt>> =
            base.objects()
                .iter()
                .map(|x| {
                    self.objects.get(x).map(ValueSpec::orders).ok_or_else(|| {
                        Error::Input(format!("diagram has no value at object `{x}`"))
                    })
                })
                .collect::<Result<_>>()?;
        let maps = base
            .morphisms()
            .iter()
            .enumerate()
            .map(|(f, m)| match self.morphisms.get(&m.name) {
                Some(rows) => {
                    let cols = orders[m.dom].len();
                    if rows.len() != orders[m.cod].len() || rows.iter().any(|r| r.len() != cols) {
                        return Err(Error::Input(format!(
                            "map of `{}` must be {}x{}",
                            m.name,
                            orders[m.cod].len(),
                            cols
                        )));
                    }
                    if rows.is_empty() {
                        return Ok(IntMatrix::zeros(0, cols));
                    }
                    Ok(IntMatrix::from_i64_rows(rows))
                }
                None if base.is_identity(f) => Ok(IntMatrix::identity(orders[m.dom].len())),
                None => Err(Error::Input(format!(
                    "diagram has no map for morphism `{}`",
                    m.name
                ))),
            })
            .collect::<Result<_>>()?;
        AbDiagram::new(base, orders, maps)
    }

    /// Explicit document for a diagram; entries must fit in `i64`.
    pub fn from_diagram(f: &AbDiagram) -> Result<Self> {
        let base = f.base();
        let small = |v: &BigInt| {
            i64::try_from(v).map_err(|_| Error::Usage("diagram entry exceeds i64".into()))
        };
        let objects = (0..base.object_count())
            .map(|x| {
                let orders = f.orders(x).iter().map(small).collect::<Result<_>>()?;
                Ok((base.objects()[x].clone(), ValueSpec::Orders { orders }))
            })
            .collect::<Result<_>>()?;
        let morphisms = (0..base.morphism_count())
            .filter(|&m| !base.is_identity(m))
            .map(|m| {
                let rows = f
                    .map(m)
                    .to_rows()
                    .iter()
                    .map(|r| r.iter().map(small).collect::<Result<Vec<_>>>())
                    .collect::<Result<_>>()?;
                Ok((base.morphism(m).name.clone(), rows))
            })
            .collect::<Result<_>>()?;
        Ok(DiagramDocument {
            category: CategorySpec::Explicit(CategoryDocument::from_category(base)),
            constant: None,
            objects,
            morphisms,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_shortcut() {
        let doc = DiagramDocument::from_json(
            r#"{"category": "theta^2", "constant": {"rank": 0, "torsion": [6]}}"#,
        )
        .unwrap();
        let f = doc.to_diagram(&Limits::default()).unwrap();
        assert_eq!(f.group(0), FGAbGroup::cyclic(6));
        assert_eq!(f.base().object_count(), 4);
    }

    #[test]
    fn explicit_diagram_with_functoriality_error() {
        let text = r#"{
            "category": {"objects": ["x", "y", "z"],
                         "morphisms": [{"name": "f", "dom": "x", "cod": "y"},
                                       {"name": "g", "dom": "y", "cod": "z"},
                                       {"name": "h", "dom": "x", "cod": "z"}],
                         "compose": [["g", "f", "h"]]},
            "objects": {"x": {"rank": 1, "torsion": []}, "y": {"rank": 1, "torsion": []}, "z": {"orders": [0]}},
            "morphisms": {"f": [[2]], "g": [[3]], "h": [[5]]}
        }"#;
        let err = DiagramDocument::from_json(text)
            .unwrap()
            .to_diagram(&Limits::default())
            .unwrap_err();
        assert!(err.to_string().contains("(g, f)"), "{err}");
        let fixed = text.replace("[[5]]", "[[6]]");
        let f = DiagramDocument::from_json(&fixed)
            .unwrap()
            .to_diagram(&Limits::default())
            .unwrap();
        let back = DiagramDocument::from_diagram(&f).unwrap();
        let again = back.to_diagram(&Limits::default()).unwrap();
        assert_eq!(
            again.map(again.base().morphism_index("h").unwrap()),
            f.map(2)
        );
    }
}

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use super::{point, theta, theta_power, FinCat, Morphism};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismEntry {
    pub name: String,
    pub dom: String,
    pub cod: String,
}

/// JSON form of a finite category.
///
/// Identities may be omitted: any object without an entry in `identities`
/// gets a morphism `1_<object>`. Composites with an identity are implied;
/// every other composable pair must appear in `compose` as `[g, f, g∘f]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CategoryDocument {
    pub objects: Vec<String>,
    #[serde(default)]
    pub morphisms: Vec<MorphismEntry>,
    #[serde(default)]
    pub identities: BTreeMap<String, String>,
    #[serde(default)]
    pub compose: Vec<[String; 3]>,
}

impl CategoryDocument {
    pub fn from_category(cat: &FinCat) -> Self {
        let name = |f: usize| cat.morphism(f).name.clone();
        CategoryDocument {
            objects: cat.objects().to_vec(),
            morphisms: cat
                .morphisms()
                .iter()
                .map(|m| MorphismEntry {
                    name: m.name.clone(),
                    dom: cat.objects()[m.dom].clone(),
                    cod: cat.objects()[m.cod].clone(),
                })
                .collect(),
            identities: (0..cat.object_count())
                .map(|x| (cat.objects()[x].clone(), name(cat.identity(x))))
                .collect(),
            compose: cat
                .composable_pairs()
                .filter(|&(g, f, _)| !cat.is_identity(g) && !cat.is_identity(f))
                .map(|(g, f, h)| [name(g), name(f), name(h)])
                .collect(),
        }
    }

    pub fn to_category(&self, limits: &Limits) -> Result<FinCat> {
        let mut object_index = HashMap::new();
        for (i, o) in self.objects.iter().enumerate() {
            if object_index.insert(o.as_str(), i).is_some() {
                return Err(Error::Input(format!("duplicate object `{o}`")));
            }
        }
        let obj = |name: &str| {
            object_index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Input(format!("unknown object `{name}`")))
        };
        let mut morphisms = Vec::new();
        let mut mor_index = HashMap::new();
        for m in &self.morphisms {
            if mor_index.insert(m.name.clone(), morphisms.len()).is_some() {
                return Err(Error::Input(format!("duplicate morphism `{}`", m.name)));
            }
            morphisms.push(Morphism {
                name: m.name.clone(),
                dom: obj(&m.dom)?,
                cod: obj(&m.cod)?,
            });
        }
        for key in self.identities.keys() {
            obj(key)?;
        }
        let mut identities = Vec::with_capacity(self.objects.len());
        for (x, name) in self.objects.iter().enumerate() {
            let id = match self.identities.get(name) {
                Some(m) => *mor_index.get(m).ok_or_else(|| {
                    Error::Input(format!("identity `{m}` is not a listed morphism"))
                })?,
                None => {
                    let id_name = format!("1_{name}");
                    match mor_index.get(&id_name) {
                        Some(&i) => i,
                        None => {
                            mor_index.insert(id_name.clone(), morphisms.len());
                            morphisms.push(Morphism {
                                name: id_name,
                                dom: x,
                                cod: x,
                            });
                            morphisms.len() - 1
                        }
                    }
                }
            };
            identities.push(id);
        }
        let mut table = HashMap::new();
        for [g, f, h] in &self.compose {
            let look = |n: &String| {
                mor_index.get(n).copied().ok_or_else(|| {
                    Error::Input(format!("unknown morphism `{n}` in composition table"))
                })
            };
            if table.insert((look(g)?, look(f)?), look(h)?).is_some() {
                return Err(Error::Input(format!(
                    "composite of `{g}` after `{f}` listed twice"
                )));
            }
        }
        let is_id: Vec<bool> = (0..morphisms.len())
            .map(|f| identities.contains(&f))
            .collect();
        let names: Vec<String> = morphisms.iter().map(|m| m.name.clone()).collect();
        FinCat::from_fn(
            self.objects.clone(),
            morphisms,
            identities,
            limits,
            |g, f| {
                if is_id[g] {
                    Ok(f)
                } else if is_id[f] {
                    Ok(g)
                } else {
                    table.get(&(g, f)).copied().ok_or_else(|| {
                        Error::Input(format!(
                            "composition table is missing `{}` after `{}`",
                            names[g], names[f]
                        ))
                    })
                }
            },
        )
    }
}

/// Named builtin categories: `point`, `theta`, `theta^n`.
pub fn builtin(name: &str) -> Result<FinCat> {
    match name.trim() {
        "point" => Ok(point()),
        "theta" => Ok(theta()),
        other => {
            let n = other
                .strip_prefix("theta^")
                .and_then(|n| n.parse::<usize>().ok())
                .ok_or_else(|| Error::Input(format!("unknown builtin category `{other}`")))?;
            theta_power(n)
        }
    }
}

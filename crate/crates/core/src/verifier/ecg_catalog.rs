//! Coalition graphs of named partitions and graph classes: the partitions of
//! `K_(2,4)` with their expected coalition graphs, stars, unicyclic graphs
//! whose singleton partition is an ec-partition, and self-coalition graphs.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical_key, is_isomorphic, CanonicalKey};
use crate::coalition::{build_ecg, is_self_edge_coalition, is_singleton_ec, singleton_partition};
use crate::enumerate::{bundled_graphs, bundled_unicyclic_8};
use crate::error::Result;
use crate::families;
use crate::graph::Graph;
use crate::partition::EdgePartition;
use crate::solver::all_ec_partitions;

use super::characterize::{class_of, GraphClass};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcgCheck {
    pub label: String,
    pub expected: String,
    pub valid_partition: bool,
    /// Canonical key of the coalition graph, when the partition is valid.
    pub ecg_key: Option<CanonicalKey>,
    pub isomorphic: bool,
}

impl EcgCheck {
    pub fn passed(&self) -> bool {
        self.valid_partition && self.isomorphic
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarCheck {
    pub n: usize,
    pub ecg_isolated: bool,
    /// Number of ec-partitions of the star; only the singleton one is claimed.
    pub ec_partitions: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnicyclicEcg {
    pub ecg_key: CanonicalKey,
    pub ecg_n: usize,
    pub ecg_m: usize,
    /// Textual coalition graph shape, when the type has one.
    pub shape: Option<String>,
    /// Keys of the graphs producing this type.
    pub sources: Vec<CanonicalKey>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelfCoalition {
    pub key: CanonicalKey,
    pub n: usize,
    pub m: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EcgCatalog {
    pub bipartite: Vec<EcgCheck>,
    /// Coalition graph types over every ec-partition of `K_(2,4)`, with the
    /// number of partitions giving each.
    pub bipartite_types: Vec<(CanonicalKey, usize)>,
    pub stars: Vec<StarCheck>,
    pub unicyclic: Vec<UnicyclicEcg>,
    pub self_coalition: Vec<SelfCoalition>,
}

impl EcgCatalog {
    pub fn bipartite_passed(&self) -> bool {
        self.bipartite.iter().all(EcgCheck::passed)
    }

    pub fn stars_passed(&self) -> bool {
        self.stars.iter().all(|s| s.ecg_isolated && s.ec_partitions == 1)
    }

    pub fn unmatched_unicyclic_types(&self) -> Vec<&UnicyclicEcg> {
        self.unicyclic.iter().filter(|u| u.shape.is_none()).collect()
    }

    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push("K_(2,4) partitions:".to_string());
        for c in &self.bipartite {
            lines.push(format!(
                "  {:<4} expected {:<10} valid={} isomorphic={} ecg={}",
                c.label,
                c.expected,
                c.valid_partition,
                c.isomorphic,
                c.ecg_key.as_ref().map_or("-", |k| k.as_str())
            ));
        }
        lines.push(format!(
            "K_(2,4) coalition graph types over all ec-partitions: {}",
            self.bipartite_types.len()
        ));
        for (key, count) in &self.bipartite_types {
            lines.push(format!("  {key} x{count}"));
        }
        lines.push("stars:".to_string());
        for s in &self.stars {
            lines.push(format!(
                "  n={} isolated={} ec_partitions={}",
                s.n, s.ecg_isolated, s.ec_partitions
            ));
        }
        lines.push(format!(
            "unicyclic singleton coalition graph types: {}",
            self.unicyclic.len()
        ));
        for u in &self.unicyclic {
            lines.push(format!(
                "  {} ({} vertices, {} edges) shape={} from {} graph(s)",
                u.ecg_key,
                u.ecg_n,
                u.ecg_m,
                u.shape.as_deref().unwrap_or("none"),
                u.sources.len()
            ));
        }
        lines.push(format!(
            "self-edge-coalition graphs (connected, n <= 7): {}",
            self.self_coalition.len()
        ));
        for s in &self.self_coalition {
            lines.push(format!("  {} n={} m={}", s.key, s.n, s.m));
        }
        lines.join("\n") + "\n"
    }
}

fn plus_edge(g: Graph) -> Graph {
    g.with_edge(0, 1).expect("the two-vertex side is not yet joined")
}

/// The six listed partitions of `K_(2,4)` as class lists over the edge
/// labels `a..h` = indices `0..8`; unlisted edges are singletons.
pub fn bipartite_partitions() -> Vec<(&'static str, Vec<Vec<usize>>, &'static str, Graph)> {
    let k = |r, s| families::complete_bipartite(r, s).expect("valid");
    vec![
        ("pi1", vec![], "K_(4,4)", k(4, 4)),
        ("pi2", vec![vec![0, 1]], "K_(3,4)", k(3, 4)),
        ("pi3", vec![vec![0, 1, 2]], "K_(2,4)+e", plus_edge(k(2, 4))),
        ("pi4", vec![vec![0, 1], vec![4, 5]], "K_(3,3)", k(3, 3)),
        ("pi5", vec![vec![0, 1], vec![2, 3], vec![4, 5]], "K_(2,3)+e", plus_edge(k(2, 3))),
        (
            "pi6",
            vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7]],
            "K4",
            families::complete(4).expect("valid"),
        ),
    ]
}

fn with_singletons(m: usize, classes: &[Vec<usize>]) -> Result<EdgePartition> {
    let mut lists = classes.to_vec();
    for e in 0..m {
        if !classes.iter().any(|c| c.contains(&e)) {
            lists.push(vec![e]);
        }
    }
    EdgePartition::from_index_lists(m, &lists)
}

fn check_partition(
    g: &Graph,
    label: &str,
    classes: &[Vec<usize>],
    expected: &str,
    target: &Graph,
) -> Result<EcgCheck> {
    let p = with_singletons(g.m(), classes)?;
    Ok(match build_ecg(g, &p) {
        Ok(ecg) => EcgCheck {
            label: label.to_string(),
            expected: expected.to_string(),
            valid_partition: true,
            ecg_key: Some(canonical_key(&ecg.graph)?),
            isomorphic: is_isomorphic(&ecg.graph, target)?,
        },
        Err(_) => EcgCheck {
            label: label.to_string(),
            expected: expected.to_string(),
            valid_partition: false,
            ecg_key: None,
            isomorphic: false,
        },
    })
}

/// Textual types a singleton coalition graph of a unicyclic graph may take.
pub fn unicyclic_ecg_shape(ecg: &Graph) -> Result<Option<String>> {
    let n = ecg.n();
    let mut named: Vec<(String, Graph)> = vec![
        ("3K1".into(), Graph::empty(3)),
        ("3K2".into(), Graph::new(6, &[(0, 1), (2, 3), (4, 5)])?),
        ("K4".into(), families::complete(4)?),
        ("C5".into(), families::cycle(5)?),
        ("K_(2,3)".into(), families::complete_bipartite(2, 3)?),
    ];
    if n >= 5 {
        let star = families::star(n - 2)?;
        named.push((format!("2K1+K_(1,{})", n - 3), Graph::empty(2).disjoint_union(&star)));
    }
    for t in 3..=n / 2 {
        named.push((format!("K_({t},{})", n - t), families::complete_bipartite(t, n - t)?));
    }
    for (name, h) in named {
        if h.n() == n && h.m() == ecg.m() && is_isomorphic(ecg, &h)? {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

pub fn verify_ecg_catalog() -> Result<EcgCatalog> {
    let k24 = families::complete_bipartite(2, 4)?;
    let bipartite = bipartite_partitions()
        .iter()
        .map(|(label, classes, expected, target)| check_partition(&k24, label, classes, expected, target))
        .collect::<Result<Vec<_>>>()?;

    let mut types: BTreeMap<CanonicalKey, usize> = BTreeMap::new();
    for p in all_ec_partitions(&k24)? {
        *types.entry(canonical_key(&build_ecg(&k24, &p)?.graph)?).or_default() += 1;
    }

    let mut stars = Vec::new();
    for n in 2..=8 {
        let star = families::star(n)?;
        let ecg = build_ecg(&star, &singleton_partition(&star)?)?;
        stars.push(StarCheck {
            n,
            ecg_isolated: ecg.graph.n() == n - 1 && ecg.graph.m() == 0,
            ec_partitions: all_ec_partitions(&star)?.len(),
        });
    }

    let mut unicyclic_graphs: Vec<Graph> = Vec::new();
    for n in 3..=7 {
        unicyclic_graphs.extend(bundled_graphs(n)?);
    }
    unicyclic_graphs.extend(bundled_unicyclic_8()?);
    let mut by_type: BTreeMap<CanonicalKey, UnicyclicEcg> = BTreeMap::new();
    for g in unicyclic_graphs {
        if class_of(&g) != Some(GraphClass::Unicyclic) || !is_singleton_ec(&g)? {
            continue;
        }
        let ecg = build_ecg(&g, &singleton_partition(&g)?)?.graph;
        let key = canonical_key(&ecg)?;
        if !by_type.contains_key(&key) {
            by_type.insert(
                key.clone(),
                UnicyclicEcg {
                    ecg_key: key.clone(),
                    ecg_n: ecg.n(),
                    ecg_m: ecg.m(),
                    shape: unicyclic_ecg_shape(&ecg)?,
                    sources: Vec::new(),
                },
            );
        }
        by_type.get_mut(&key).expect("inserted").sources.push(canonical_key(&g)?);
    }

    let mut self_coalition = Vec::new();
    for n in 2..=7 {
        for g in bundled_graphs(n)? {
            if g.is_connected() && is_self_edge_coalition(&g)? {
                self_coalition.push(SelfCoalition {
                    key: canonical_key(&g)?,
                    n: g.n(),
                    m: g.m(),
                });
            }
        }
    }

    Ok(EcgCatalog {
        bipartite,
        bipartite_types: types.into_iter().collect(),
        stars,
        unicyclic: by_type.into_values().collect(),
        self_coalition,
    })
}

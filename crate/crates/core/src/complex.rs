//! Abstract pure simplicial complexes: stars, links, suspensions, f-vectors,
//! pseudomanifold checks, and the combinatorial facts about the edge `e1 d3`
//! of the desingularised Barnette sphere.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::fan::Fan;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("vertex label {0:?} not present")]
    MissingLabel(String),
    #[error("{0} is not a face of the complex")]
    FaceNotPresent(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("complex is not pure: facets of sizes {0} and {1}")]
    NotPure(usize, usize),
    #[error("facet {0} is contained in facet {1}")]
    NestedFacets(String, String),
    #[error("facet {0} repeats a vertex")]
    RepeatedVertex(String),
    #[error("vertex {0:?} lies in no facet")]
    UnusedVertex(String),
    #[error("vertex index {0} out of range")]
    BadIndex(usize),
}

/// A pure simplicial complex given by its facets. Facets are stored as sorted
/// vertex-index lists and kept in insertion order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    labels: Vec<String>,
    facets: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    pub fn new(labels: Vec<String>, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        let mut seen = HashSet::new();
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(ComplexError::DuplicateLabel(l.clone()));
            }
        }
        let mut sorted = Vec::with_capacity(facets.len());
        for f in facets {
            if let Some(&bad) = f.iter().find(|&&v| v >= labels.len()) {
                return Err(ComplexError::BadIndex(bad));
            }
            let mut s = f.clone();
            s.sort_unstable();
            s.dedup();
            if s.len() != f.len() {
                return Err(ComplexError::RepeatedVertex(word(&labels, &f)));
            }
            sorted.push(s);
        }
        if let (Some(a), Some(b)) = (sorted.first(), sorted.iter().find(|f| f.len() != sorted[0].len())) {
            return Err(ComplexError::NotPure(a.len(), b.len()));
        }
        // same size, so containment means equality
        let mut distinct = HashSet::new();
        for f in &sorted {
            if !distinct.insert(f.clone()) {
                return Err(ComplexError::NestedFacets(word(&labels, f), word(&labels, f)));
            }
        }
        let used: HashSet<usize> = sorted.iter().flatten().copied().collect();
        if let Some(i) = (0..labels.len()).find(|i| !used.contains(i)) {
            return Err(ComplexError::UnusedVertex(labels[i].clone()));
        }
        Ok(Self { labels, facets: sorted })
    }

    /// Builds a complex from facets given as label lists; vertices are
    /// numbered in order of first appearance.
    pub fn from_label_facets<S: AsRef<str>>(facets: &[Vec<S>]) -> Result<Self, ComplexError> {
        let mut labels: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let facets = facets
            .iter()
            .map(|f| {
                f.iter()
                    .map(|l| {
                        let l = l.as_ref();
                        *index.entry(l.to_string()).or_insert_with(|| {
                            labels.push(l.to_string());
                            labels.len() - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Self::new(labels, facets)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// Dimension of the facets (`-1` for the complex `{{}}` or an empty one).
    pub fn dim(&self) -> isize {
        self.facets.first().map_or(-1, |f| f.len() as isize - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn vertices(&self, labels: &[&str]) -> Result<Vec<usize>, ComplexError> {
        labels
            .iter()
            .map(|l| self.vertex(l).ok_or_else(|| ComplexError::MissingLabel(l.to_string())))
            .collect()
    }

    pub fn face_word(&self, face: &[usize]) -> String {
        word(&self.labels, face)
    }

    pub fn facet_labels(&self, facet: usize) -> Vec<&str> {
        self.facets[facet].iter().map(|&v| self.labels[v].as_str()).collect()
    }

    /// Facets as sets of labels; two complexes with equal label facets are
    /// isomorphic via the identity on labels.
    pub fn label_facets(&self) -> BTreeSet<BTreeSet<String>> {
        self.facets
            .iter()
            .map(|f| f.iter().map(|&v| self.labels[v].clone()).collect())
            .collect()
    }

    pub fn same_labelled(&self, other: &SimplicialComplex) -> bool {
        self.label_facets() == other.label_facets()
    }

    pub fn is_face(&self, face: &[usize]) -> bool {
        self.facets.iter().any(|f| face.iter().all(|v| f.contains(v)))
    }

    pub fn has_facet(&self, labels: &[&str]) -> bool {
        let Ok(mut vs) = self.vertices(labels) else { return false };
        vs.sort_unstable();
        self.facets.contains(&vs)
    }

    fn subcomplex(&self, facets: Vec<Vec<usize>>) -> SimplicialComplex {
        let used: BTreeSet<usize> = facets.iter().flatten().copied().collect();
        let remap: HashMap<usize, usize> = used.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let labels = used.iter().map(|&v| self.labels[v].clone()).collect();
        let facets = facets
            .into_iter()
            .map(|f| {
                let mut g: Vec<usize> = f.iter().map(|v| remap[v]).collect();
                g.sort_unstable();
                g
            })
            .collect();
        SimplicialComplex { labels, facets }
    }

    fn require_face(&self, face: &[usize]) -> Result<(), ComplexError> {
        if face.iter().any(|&v| v >= self.labels.len()) || !self.is_face(face) {
            return Err(ComplexError::FaceNotPresent(self.face_word(face)));
        }
        Ok(())
    }

    /// The subcomplex generated by the facets containing `face`.
    pub fn star(&self, face: &[usize]) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(face)?;
        let facets = self.facets.iter().filter(|f| face.iter().all(|v| f.contains(v))).cloned().collect();
        Ok(self.subcomplex(facets))
    }

    /// `{ t \ face : t a facet containing face }`.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(face)?;
        let facets = self
            .facets
            .iter()
            .filter(|f| face.iter().all(|v| f.contains(v)))
            .map(|f| f.iter().copied().filter(|v| !face.contains(v)).collect())
            .collect();
        Ok(self.subcomplex(facets))
    }

    pub fn star_of(&self, labels: &[&str]) -> Result<SimplicialComplex, ComplexError> {
        self.star(&self.vertices(labels)?)
    }

    pub fn link_of(&self, labels: &[&str]) -> Result<SimplicialComplex, ComplexError> {
        self.link(&self.vertices(labels)?)
    }

    /// Joins every facet with each of two new apices `N` and `S` (renamed if
    /// those labels are taken).
    pub fn suspension(&self) -> SimplicialComplex {
        let fresh = |base: &str| {
            if self.vertex(base).is_none() {
                return base.to_string();
            }
            (1..).map(|i| format!("{base}{i}")).find(|l| self.vertex(l).is_none()).unwrap()
        };
        let mut labels = self.labels.clone();
        let n = labels.len();
        labels.push(fresh("N"));
        labels.push(fresh("S"));
        let mut facets = Vec::with_capacity(2 * self.facets.len());
        for apex in [n, n + 1] {
            for f in &self.facets {
                let mut g = f.clone();
                g.push(apex);
                facets.push(g);
            }
        }
        SimplicialComplex { labels, facets }
    }

    /// Face counts `f_0, ..., f_d` by enumerating every non-empty subset of
    /// every facet.
    pub fn f_vector(&self) -> FVector {
        let d = self.facets.first().map_or(0, Vec::len);
        let mut faces: Vec<HashSet<Vec<usize>>> = vec![HashSet::new(); d];
        for f in &self.facets {
            for mask in 1u64..(1 << f.len()) {
                let sub: Vec<usize> = (0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                faces[sub.len() - 1].insert(sub);
            }
        }
        FVector(faces.iter().map(HashSet::len).collect())
    }

    /// Every ridge in exactly two facets, connected dual graph, and the Euler
    /// characteristic of a sphere of the facet dimension.
    pub fn pseudomanifold_check(&self) -> PseudomanifoldReport {
        let mut ridges: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (i, f) in self.facets.iter().enumerate() {
            for skip in 0..f.len() {
                let r: Vec<usize> = f.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                ridges.entry(r).or_default().push(i);
            }
        }
        let mut ridge_defects: Vec<RidgeDefect> = ridges
            .iter()
            .filter(|(_, fs)| fs.len() != 2)
            .map(|(r, fs)| RidgeDefect { ridge: self.face_word(r), multiplicity: fs.len() })
            .collect();
        ridge_defects.sort_by(|a, b| a.ridge.cmp(&b.ridge));

        let n = self.facets.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for fs in ridges.values() {
            for w in fs.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let components = (0..n).filter(|&i| find(&mut parent, i) == i).count();

        let fv = self.f_vector();
        let euler_characteristic = fv.euler_characteristic();
        let d = self.dim();
        let expected_euler = if d % 2 == 0 { 2 } else { 0 };
        let connected = components <= 1;
        PseudomanifoldReport {
            passed: ridge_defects.is_empty() && connected && euler_characteristic == expected_euler,
            ridge_defects,
            connected,
            euler_characteristic,
            expected_euler,
        }
    }

    /// Stellar subdivision at a new vertex placed inside `face`: each facet
    /// `t` containing `face` is replaced by `t - {r} + {new}` for every `r` in
    /// `face`.
    pub fn stellar_subdivide(&self, face: &[usize], new_label: &str) -> Result<SimplicialComplex, ComplexError> {
        self.require_face(face)?;
        if self.vertex(new_label).is_some() {
            return Err(ComplexError::DuplicateLabel(new_label.to_string()));
        }
        let mut labels = self.labels.clone();
        labels.push(new_label.to_string());
        let new = labels.len() - 1;
        let mut facets = Vec::new();
        for f in &self.facets {
            if face.iter().all(|v| f.contains(v)) {
                for &r in face {
                    facets.push(f.iter().map(|&v| if v == r { new } else { v }).collect());
                }
            } else {
                facets.push(f.clone());
            }
        }
        SimplicialComplex::new(labels, facets)
    }

    /// Edges of a 1-dimensional complex arranged as a closed walk, if it is
    /// a single cycle.
    pub fn as_cycle(&self) -> Option<Vec<String>> {
        if self.dim() != 1 || self.facets.len() < 3 {
            return None;
        }
        let mut adj: HashMap<usize, Vec<usize>> = HashMap::new();
        for f in &self.facets {
            adj.entry(f[0]).or_default().push(f[1]);
            adj.entry(f[1]).or_default().push(f[0]);
        }
        if adj.values().any(|n| n.len() != 2) {
            return None;
        }
        let start = self.facets[0][0];
        let mut walk = vec![start];
        let mut prev = start;
        let mut cur = adj[&start][0];
        while cur != start {
            walk.push(cur);
            let next = if adj[&cur][0] == prev { adj[&cur][1] } else { adj[&cur][0] };
            prev = cur;
            cur = next;
        }
        (walk.len() == self.labels.len()).then(|| walk.iter().map(|&v| self.labels[v].clone()).collect())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.facets.iter().map(|x| self.face_word(x)).collect();
        write!(f, "{{{}}}", words.join(", "))
    }
}

fn word(labels: &[String], face: &[usize]) -> String {
    face.iter().map(|&v| labels[v].as_str()).collect()
}

/// The complex whose vertices are the rays of `fan` and whose facets are its
/// maximal cones.
pub fn underlying_complex(fan: &Fan) -> SimplicialComplex {
    let labels = fan.rays().iter().map(|r| r.label.clone()).collect();
    let facets = fan.cones().iter().map(|c| c.rays.clone()).collect();
    SimplicialComplex::new(labels, facets).expect("maximal cones of a fan form a pure complex")
}

/// `f_0, f_1, ..., f_d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &f)| if i % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum()
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RidgeDefect {
    pub ridge: String,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudomanifoldReport {
    pub passed: bool,
    pub ridge_defects: Vec<RidgeDefect>,
    pub connected: bool,
    pub euler_characteristic: i64,
    pub expected_euler: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Fact {
    pub name: String,
    pub passed: bool,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub facts: Vec<Fact>,
    pub verdict: bool,
    /// The computed star of `e1 d3`, as label words.
    pub star_e1d3: Vec<String>,
    /// Differences between the computed star and [`QUOTED_STAR_E1D3`].
    pub star_discrepancies: Vec<String>,
}

/// The six-facet listing of the star of `e1 d3` as it is usually quoted. Its
/// fifth entry `d1 e2 e3 e4` contains neither `e1` nor `d3`; the facet that
/// actually completes the star is `e1 e2 d3 e4`.
pub const QUOTED_STAR_E1D3: [[&str; 4]; 6] = [
    ["e1", "d2", "e3", "d3"],
    ["e1", "d3", "e3", "c1"],
    ["e1", "d1", "d3", "c1"],
    ["e1", "e2", "d3", "d1"],
    ["d1", "e2", "e3", "e4"],
    ["e1", "d2", "d3", "e4"],
];

/// The link of `e1 d3`: the 6-cycle d2-e3-c1-d1-e2-e4-d2.
pub const EXPECTED_LINK_E1D3: [[&str; 2]; 6] =
    [["d2", "e3"], ["e3", "c1"], ["c1", "d1"], ["d1", "e2"], ["e2", "e4"], ["e4", "d2"]];

const A2: [&str; 4] = ["d1", "e2", "e3", "e4"];
const A6: [&str; 4] = ["d1", "d2", "e3", "e4"];

fn label_set<const N: usize>(words: &[[&str; N]]) -> BTreeSet<BTreeSet<String>> {
    words.iter().map(|w| w.iter().map(|s| s.to_string()).collect()).collect()
}

fn set_word(s: &BTreeSet<String>) -> String {
    s.iter().map(String::as_str).collect::<Vec<_>>().join("")
}

/// Checks the combinatorial facts about `K` (the desingularised Barnette
/// sphere) that the non-polytopality argument relies on:
///
/// 1. `d1 e2 e3 e4` and `d1 d2 e3 e4` are facets meeting exactly in `d1 e3 e4`;
/// 2. `c1` is a vertex of neither;
/// 3. the star of the edge `e1 d3` has six facets;
/// 4. the link of `e1 d3` is the 6-cycle `d2 e3 c1 d1 e2 e4`.
///
/// The computed star is also compared with [`QUOTED_STAR_E1D3`] and any
/// difference is listed in `star_discrepancies` without affecting the
/// verdict.
pub fn verify_barnette_obstruction(c: &SimplicialComplex) -> Result<ObstructionReport, ComplexError> {
    c.vertices(&["e1", "e2", "e3", "e4", "d1", "d2", "d3", "d4", "c1"])?;
    let mut facts = Vec::new();

    let a2: BTreeSet<String> = A2.iter().map(|s| s.to_string()).collect();
    let a6: BTreeSet<String> = A6.iter().map(|s| s.to_string()).collect();
    let common: BTreeSet<String> = a2.intersection(&a6).cloned().collect();
    let expected_common: BTreeSet<String> = ["d1", "e3", "e4"].iter().map(|s| s.to_string()).collect();
    let both_facets = c.has_facet(&A2) && c.has_facet(&A6);
    facts.push(Fact {
        name: "A2 and A6 are facets meeting in d1e3e4".into(),
        passed: both_facets && common == expected_common,
        witness: format!(
            "A2 facet: {}, A6 facet: {}, intersection: {}",
            c.has_facet(&A2),
            c.has_facet(&A6),
            set_word(&common)
        ),
    });

    let c1_outside = !a2.contains("c1") && !a6.contains("c1");
    facts.push(Fact {
        name: "c1 is not a vertex of A2 or A6".into(),
        passed: c1_outside,
        witness: format!("A2 = {}, A6 = {}", set_word(&a2), set_word(&a6)),
    });

    let star = c.star_of(&["e1", "d3"])?;
    let star_sets = star.label_facets();
    let star_words: Vec<String> = star.facets().iter().map(|f| star.face_word(f)).collect();
    facts.push(Fact {
        name: "star of e1d3 has six facets".into(),
        passed: star_sets.len() == 6,
        witness: star_words.join(", "),
    });
    let quoted = label_set(&QUOTED_STAR_E1D3);
    let mut star_discrepancies = Vec::new();
    for q in quoted.difference(&star_sets) {
        star_discrepancies.push(format!("quoted facet {} is not in the star", set_word(q)));
    }
    for s in star_sets.difference(&quoted) {
        star_discrepancies.push(format!("facet {} of the star is missing from the quoted list", set_word(s)));
    }

    let link = c.link_of(&["e1", "d3"])?;
    let cycle = link.as_cycle();
    let edges_match = link.label_facets() == label_set(&EXPECTED_LINK_E1D3);
    facts.push(Fact {
        name: "link of e1d3 is the 6-cycle d2-e3-c1-d1-e2-e4".into(),
        passed: edges_match && cycle.as_ref().is_some_and(|w| w.len() == 6),
        witness: match &cycle {
            Some(w) => format!("cycle {}", w.join("-")),
            None => format!("not a cycle: {link}"),
        },
    });

    let verdict = facts.iter().all(|f| f.passed);
    Ok(ObstructionReport { facts, verdict, star_e1d3: star_words, star_discrepancies })
}

use std::fmt;

use super::canon::{canonical_form, CanonicalForm};
use super::OracleError;
use crate::condense::{condensation, is_transitive};
use crate::criticality::{CompletionProbe, Invariant};
use crate::digraph::Digraph;
use crate::distance::Distance;
use crate::families::{build_family, FamilySpec};
use crate::metrics::{Scratch, Summary};

/// One condition on a digraph. A predicate is a conjunction of atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Diameter(Distance),
    QuasiDiameter(Distance),
    Radius(Distance),
    QuasiRadius(Distance),
    Bicomponents(usize),
    Arcs(usize),
    Critical(Invariant),
    Biconnected,
    Transitive,
    HertzIsomorphicTo(FamilySpec),
}

impl Atom {
    fn cost(&self) -> u8 {
        match self {
            Atom::Arcs(_) => 0,
            Atom::Diameter(_)
            | Atom::QuasiDiameter(_)
            | Atom::Radius(_)
            | Atom::QuasiRadius(_)
            | Atom::Bicomponents(_)
            | Atom::Biconnected => 1,
            Atom::Transitive => 2,
            Atom::Critical(_) => 3,
            Atom::HertzIsomorphicTo(_) => 4,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Diameter(c) => write!(f, "d={c}"),
            Atom::QuasiDiameter(c) => write!(f, "d_m={c}"),
            Atom::Radius(c) => write!(f, "r={c}"),
            Atom::QuasiRadius(c) => write!(f, "r_m={c}"),
            Atom::Bicomponents(c) => write!(f, "bicomponents={c}"),
            Atom::Arcs(c) => write!(f, "arcs={c}"),
            Atom::Critical(inv) => write!(f, "{inv}-critical"),
            Atom::Biconnected => f.write_str("biconnected"),
            Atom::Transitive => f.write_str("transitive"),
            Atom::HertzIsomorphicTo(spec) => write!(f, "hertz~{spec:?}"),
        }
    }
}

#[derive(Clone, Debug)]
enum Test {
    Arcs(usize),
    Value(Invariant, Distance),
    Bicomponents(usize),
    Transitive,
    Critical(Invariant),
    Hertz(CanonicalForm),
}

/// A conjunction of atoms, evaluated cheapest first. The empty conjunction
/// holds for every digraph.
#[derive(Clone, Debug)]
pub struct Predicate {
    atoms: Vec<Atom>,
    tests: Vec<Test>,
}

impl Predicate {
    pub fn new(atoms: Vec<Atom>) -> Result<Self, OracleError> {
        let mut atoms = atoms;
        atoms.sort_by_key(Atom::cost);
        let tests = atoms
            .iter()
            .map(|a| {
                Ok(match a {
                    Atom::Arcs(c) => Test::Arcs(*c),
                    Atom::Diameter(c) => Test::Value(Invariant::D, *c),
                    Atom::QuasiDiameter(c) => Test::Value(Invariant::DM, *c),
                    Atom::Radius(c) => Test::Value(Invariant::R, *c),
                    Atom::QuasiRadius(c) => Test::Value(Invariant::RM, *c),
                    Atom::Bicomponents(c) => Test::Bicomponents(*c),
                    Atom::Biconnected => Test::Bicomponents(1),
                    Atom::Transitive => Test::Transitive,
                    Atom::Critical(inv) => Test::Critical(*inv),
                    Atom::HertzIsomorphicTo(spec) => Test::Hertz(canonical_form(&build_family(spec)?)?),
                })
            })
            .collect::<Result<_, OracleError>>()?;
        Ok(Predicate { atoms, tests })
    }

    pub fn always() -> Self {
        Predicate {
            atoms: Vec::new(),
            tests: Vec::new(),
        }
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    pub fn matches(&self, s: &mut Subject) -> bool {
        self.tests.iter().all(|t| match *t {
            Test::Arcs(c) => s.arc_count() == c,
            Test::Value(inv, c) => inv.of_summary(&s.summary()) == c,
            Test::Bicomponents(c) => s.summary().bicomponents == c,
            Test::Transitive => is_transitive(&s.g),
            Test::Critical(inv) => s.is_critical(inv),
            Test::Hertz(form) => {
                let h = condensation(&s.g).hertz;
                h.n() == form.n && canonical_form(&h).is_ok_and(|c| c == form)
            }
        })
    }

    /// Evaluates the predicate on one digraph outside a scan.
    pub fn eval(&self, g: &Digraph) -> bool {
        let mut s = Subject::new(g.n());
        s.g.clone_from(g);
        self.matches(&mut s)
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("true");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" and ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

/// The digraph currently under inspection in a scan, with lazily computed
/// and cached invariants.
pub struct Subject {
    mask: u64,
    g: Digraph,
    probe: CompletionProbe,
    scratch: Scratch,
    summary: Option<Summary>,
}

impl Subject {
    pub(crate) fn new(n: usize) -> Self {
        let g = Digraph::empty(n).expect("scans need n >= 1");
        Subject {
            mask: 0,
            probe: CompletionProbe::new(&g),
            scratch: Scratch::new(&g),
            g,
            summary: None,
        }
    }

    pub(crate) fn load(&mut self, mask: u64) {
        self.mask = mask;
        self.g.load_mask(mask);
        self.summary = None;
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn digraph(&self) -> &Digraph {
        &self.g
    }

    pub fn arc_count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn summary(&mut self) -> Summary {
        match self.summary {
            Some(s) => s,
            None => {
                let s = self.scratch.summary(&self.g);
                self.summary = Some(s);
                s
            }
        }
    }

    /// Distance between 1-based vertices.
    pub fn distance(&mut self, x: usize, y: usize) -> Distance {
        self.summary();
        self.scratch.dist(x - 1, y - 1)
    }

    pub fn is_critical(&mut self, inv: Invariant) -> bool {
        let before = self.summary();
        self.probe.is_critical(&self.g, inv, &before)
    }

    /// Whether `f` holds for the summary of every single-arc completion.
    pub fn all_completions(&mut self, mut f: impl FnMut(&Summary) -> bool) -> bool {
        self.probe.for_each_completion(&self.g, |_, s| f(s))
    }
}

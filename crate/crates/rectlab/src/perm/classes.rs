use std::fmt;

use super::pattern::{contains_pattern, patterns, MeshPattern};
use super::Permutation;

/// Named permutation classes, each defined by a list of avoided patterns.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum PermClass {
    Baxter,
    TwistedBaxter,
    CoTwistedBaxter,
    Separable,
    TwoClumped,
    CoTwoClumped,
    SemiBaxter,
    P1P2Avoiding,
}

impl PermClass {
    pub const ALL: [PermClass; 8] = [
        PermClass::Baxter,
        PermClass::TwistedBaxter,
        PermClass::CoTwistedBaxter,
        PermClass::Separable,
        PermClass::TwoClumped,
        PermClass::CoTwoClumped,
        PermClass::SemiBaxter,
        PermClass::P1P2Avoiding,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PermClass::Baxter => "baxter",
            PermClass::TwistedBaxter => "twisted_baxter",
            PermClass::CoTwistedBaxter => "co_twisted_baxter",
            PermClass::Separable => "separable",
            PermClass::TwoClumped => "two_clumped",
            PermClass::CoTwoClumped => "co_two_clumped",
            PermClass::SemiBaxter => "semi_baxter",
            PermClass::P1P2Avoiding => "p1p2_avoiding",
        }
    }

    pub fn from_name(name: &str) -> Option<PermClass> {
        PermClass::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn forbidden(self) -> Vec<MeshPattern> {
        use patterns::*;
        match self {
            PermClass::Baxter => vec![v2_41_3(), v3_14_2()],
            PermClass::TwistedBaxter => vec![v2_41_3(), v3_41_2()],
            PermClass::CoTwistedBaxter => vec![v2_14_3(), v3_14_2()],
            PermClass::Separable => vec![classical_2413(), classical_3142()],
            PermClass::TwoClumped => two_clumped().to_vec(),
            PermClass::CoTwoClumped => co_two_clumped().to_vec(),
            PermClass::SemiBaxter => vec![v2_41_3()],
            PermClass::P1P2Avoiding => vec![p1(), p2()],
        }
    }

    pub fn contains(self, pi: &Permutation) -> bool {
        self.forbidden().iter().all(|m| !contains_pattern(pi, m))
    }
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The set of classes a permutation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct ClassFlags(u8);

impl ClassFlags {
    pub fn has(self, class: PermClass) -> bool {
        self.0 >> class as u8 & 1 == 1
    }

    pub fn iter(self) -> impl Iterator<Item = PermClass> {
        PermClass::ALL.into_iter().filter(move |&c| self.has(c))
    }
}

pub fn classify(pi: &Permutation) -> ClassFlags {
    let bits = PermClass::ALL.into_iter().filter(|c| c.contains(pi)).fold(0u8, |acc, c| acc | 1 << c as u8);
    ClassFlags(bits)
}

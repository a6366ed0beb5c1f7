//! Geometric realization of words as lattice ray trajectories in two
//! branching systems.
//!
//! In the plain walk (the Galton-board picture) every letter deflects the ray
//! to a fixed direction: the step angle is -1 for `a`, +1 for `b`. In the
//! integrated walk (the quasi-resonator picture) each letter tilts the ray
//! relative to its previous direction, so the angle accumulates and the
//! transverse position accumulates the angle. Angles are in abstract units of
//! the elementary deflection; only their integer multiples matter.
//!
//! Endpoints recover the word indices affinely: `x_n = 2p - n` in the plain
//! system and `x_n = 2q - n(n+1)/2` in the integrated system. A link is the
//! ray segment of one step, identified by `(step, start position, angle)`;
//! in the integrated system distinct letters can produce the same link,
//! which is what makes those links superimposed.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use crate::error::Error;
use crate::triangles::TriangleKind;
use crate::words::{word_from_ordinal, IndexKind, Letter, Word, DEFAULT_ENUMERATION_CAP};

/// The two branching systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WalkSystem {
    /// Fixed step directions; endpoints follow the linear (Pascal) row.
    PlainWalk,
    /// Accumulated directions; endpoints follow the nonlinear row.
    IntegratedWalk,
}

impl WalkSystem {
    /// The word index whose classes this system's endpoints reproduce.
    pub fn index_kind(self) -> IndexKind {
        match self {
            WalkSystem::PlainWalk => IndexKind::P,
            WalkSystem::IntegratedWalk => IndexKind::Q,
        }
    }

    /// The triangle whose rows count this system's endpoint classes.
    pub fn triangle_kind(self) -> TriangleKind {
        self.index_kind().triangle_kind()
    }
}

/// A word realized as a trajectory: per-step angles and visited positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrajectoryPath {
    pub word: Word,
    pub system: WalkSystem,
    /// Angles after each step, in elementary deflection units.
    pub angles: Vec<i64>,
    /// Transverse positions, starting from `x_0 = 0`; length `n + 1`.
    pub positions: Vec<i64>,
}

impl TrajectoryPath {
    /// Final transverse position `x_n`.
    pub fn endpoint(&self) -> i64 {
        *self.positions.last().expect("positions never empty")
    }

    /// Endpoint translated to the triangle row index (`p` or `q`).
    pub fn endpoint_index(&self) -> u64 {
        let max = self.system.triangle_kind().max_index(self.word.len()) as i64;
        ((self.endpoint() + max) / 2) as u64
    }
}

fn deflection(letter: Letter) -> i64 {
    match letter {
        Letter::A => -1,
        Letter::B => 1,
    }
}

/// Traces the trajectory of `word` through the chosen branching system.
pub fn realize_path(word: Word, system: WalkSystem) -> TrajectoryPath {
    let n = word.len() as usize;
    let mut angles = Vec::with_capacity(n);
    let mut positions = Vec::with_capacity(n + 1);
    positions.push(0);
    let mut angle = 0i64;
    let mut position = 0i64;
    for letter in word.letters() {
        angle = match system {
            WalkSystem::PlainWalk => deflection(letter),
            WalkSystem::IntegratedWalk => angle + deflection(letter),
        };
        position += angle;
        angles.push(angle);
        positions.push(position);
    }
    TrajectoryPath {
        word,
        system,
        angles,
        positions,
    }
}

/// All words of one endpoint, keyed by the triangle row index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointClass {
    /// Triangle row index (`p` or `q`).
    pub index: u64,
    /// Raw lattice endpoint `x_n`.
    pub endpoint: i64,
    /// Words reaching this endpoint, in ordinal order.
    pub words: Vec<Word>,
}

/// Endpoint classes of all `2^n` words of one system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndpointClasses {
    pub system: WalkSystem,
    pub n: u32,
    /// One class per row index, in increasing index order.
    pub classes: Vec<EndpointClass>,
}

impl EndpointClasses {
    /// The class with the given row index.
    pub fn class(&self, index: u64) -> Option<&EndpointClass> {
        self.classes.get(usize::try_from(index).ok()?)
    }
}

/// Groups all `2^n` words by trajectory endpoint, under
/// [`DEFAULT_ENUMERATION_CAP`]. Class sizes reproduce the corresponding
/// triangle row.
pub fn endpoint_classes(n: u32, system: WalkSystem) -> Result<EndpointClasses, Error> {
    endpoint_classes_with_cap(n, system, DEFAULT_ENUMERATION_CAP)
}

/// [`endpoint_classes`] with an explicit enumeration cap.
pub fn endpoint_classes_with_cap(
    n: u32,
    system: WalkSystem,
    cap: u32,
) -> Result<EndpointClasses, Error> {
    let kind = system.triangle_kind();
    let max = kind.max_index(n);
    let mut members: Vec<Vec<Word>> = vec![Vec::new(); (max + 1) as usize];
    for_each_word(n, cap, |word| {
        let index = match system.index_kind() {
            IndexKind::P => u64::from(word.p_index()),
            IndexKind::Q => word.q_index(),
        };
        members[index as usize].push(word);
    })?;
    let classes = members
        .into_iter()
        .enumerate()
        .map(|(index, words)| EndpointClass {
            index: index as u64,
            endpoint: 2 * index as i64 - max as i64,
            words,
        })
        .collect();
    Ok(EndpointClasses { system, n, classes })
}

/// One ray segment, identified by step number, start position, and angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link {
    /// 1-based step number `t`.
    pub step: u32,
    /// Start position `x_{t-1}`.
    pub start: i64,
    /// Angle `theta_t` (equivalently, end position `start + angle`).
    pub angle: i64,
}

/// All trajectories through one link, with the letters they assign to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkReport {
    pub link: Link,
    /// Traversing words in ordinal order.
    pub words: Vec<Word>,
    /// Letters the traversing words assign to this link.
    pub labels: BTreeSet<Letter>,
}

impl LinkReport {
    /// A link is superimposed (ambiguous) when traversing words disagree on
    /// its letter.
    pub fn is_ambiguous(&self) -> bool {
        self.labels.len() == 2
    }
}

/// One report per distinct link across all `2^n` trajectories, ordered by
/// `(step, start, angle)`, under [`DEFAULT_ENUMERATION_CAP`].
pub fn link_reports(n: u32, system: WalkSystem) -> Result<Vec<LinkReport>, Error> {
    link_reports_with_cap(n, system, DEFAULT_ENUMERATION_CAP)
}

/// [`link_reports`] with an explicit enumeration cap.
pub fn link_reports_with_cap(
    n: u32,
    system: WalkSystem,
    cap: u32,
) -> Result<Vec<LinkReport>, Error> {
    let mut table: BTreeMap<Link, (Vec<Word>, BTreeSet<Letter>)> = BTreeMap::new();
    for_each_word(n, cap, |word| {
        let mut angle = 0i64;
        let mut position = 0i64;
        for (step, letter) in word.letters().enumerate() {
            angle = match system {
                WalkSystem::PlainWalk => deflection(letter),
                WalkSystem::IntegratedWalk => angle + deflection(letter),
            };
            let link = Link {
                step: step as u32 + 1,
                start: position,
                angle,
            };
            position += angle;
            let entry = table.entry(link).or_default();
            entry.0.push(word);
            entry.1.insert(letter);
        }
    })?;
    Ok(table
        .into_iter()
        .map(|(link, (words, labels))| LinkReport { link, words, labels })
        .collect())
}

/// Runs `f` over all words of length `n` in ordinal order, cap-guarded.
fn for_each_word(n: u32, cap: u32, mut f: impl FnMut(Word)) -> Result<(), Error> {
    crate::words::check_cap(n, cap)?;
    for m in 0..(1u64 << n) {
        f(word_from_ordinal(n, m).expect("ordinal in range"));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::triangles::{nonlinear_row, pascal_row};
    use num_bigint::BigUint;
    use proptest::prelude::*;

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn integrated_walk_paths() {
        let path = realize_path(word("abba"), WalkSystem::IntegratedWalk);
        assert_eq!(path.angles, [-1, 0, 1, 0]);
        assert_eq!(path.positions, [0, -1, -1, 0, 0]);
        assert_eq!(path.endpoint(), 2 * 5 - 10);

        let path = realize_path(word("baab"), WalkSystem::IntegratedWalk);
        assert_eq!(path.angles, [1, 0, -1, 0]);
        assert_eq!(path.positions, [0, 1, 1, 0, 0]);

        let path = realize_path(word("aaa"), WalkSystem::IntegratedWalk);
        assert_eq!(path.endpoint(), -6);
        assert_eq!(path.endpoint_index(), 0);
    }

    #[test]
    fn plain_walk_paths() {
        let path = realize_path(word("abba"), WalkSystem::PlainWalk);
        assert_eq!(path.angles, [-1, 1, 1, -1]);
        assert_eq!(path.positions, [0, -1, 0, 1, 0]);
        assert_eq!(path.endpoint(), 2 * 2 - 4);
    }

    #[test]
    fn endpoint_classes_small_integrated() {
        let classes = endpoint_classes(3, WalkSystem::IntegratedWalk).unwrap();
        assert_eq!(classes.class(3).unwrap().words, vec![word("abb"), word("baa")]);
        assert_eq!(classes.class(1).unwrap().words, vec![word("aab")]);
        assert_eq!(classes.class(3).unwrap().endpoint, 0);
    }

    #[test]
    fn endpoint_classes_small_plain() {
        let classes = endpoint_classes(3, WalkSystem::PlainWalk).unwrap();
        assert_eq!(classes.class(0).unwrap().words, vec![word("aaa")]);
        assert_eq!(classes.class(0).unwrap().endpoint, -3);
    }

    #[test]
    fn endpoint_class_sizes_match_rows() {
        for n in 0..=12 {
            for (system, row) in [
                (WalkSystem::PlainWalk, pascal_row(n)),
                (WalkSystem::IntegratedWalk, nonlinear_row(n)),
            ] {
                let classes = endpoint_classes(n, system).unwrap();
                assert_eq!(classes.classes.len(), row.len());
                for class in &classes.classes {
                    assert_eq!(
                        BigUint::from(class.words.len()),
                        row.coeffs()[class.index as usize],
                        "{system:?} n={n} index={}",
                        class.index
                    );
                }
            }
        }
    }

    #[test]
    fn superimposed_final_link_at_n4() {
        let reports = link_reports(4, WalkSystem::IntegratedWalk).unwrap();
        let ambiguous: Vec<_> = reports.iter().filter(|r| r.is_ambiguous()).collect();
        assert_eq!(ambiguous.len(), 1);
        let report = ambiguous[0];
        assert_eq!(
            report.link,
            Link {
                step: 4,
                start: 0,
                angle: 0
            }
        );
        assert_eq!(report.words, vec![word("abba"), word("baab")]);
        assert_eq!(
            report.labels.iter().copied().collect::<Vec<_>>(),
            [Letter::A, Letter::B]
        );
    }

    #[test]
    fn ambiguous_links_are_vertical_at_n4() {
        let reports = link_reports(4, WalkSystem::IntegratedWalk).unwrap();
        for report in reports.iter().filter(|r| r.is_ambiguous()) {
            assert_eq!(report.link.angle, 0);
        }
    }

    #[test]
    fn single_letter_links() {
        for system in [WalkSystem::PlainWalk, WalkSystem::IntegratedWalk] {
            let reports = link_reports(1, system).unwrap();
            assert_eq!(reports.len(), 2);
            for report in &reports {
                assert_eq!(report.words.len(), 1);
                assert!(!report.is_ambiguous());
            }
        }
    }

    #[test]
    fn plain_walk_has_no_ambiguous_links() {
        for n in 0..=10 {
            let reports = link_reports(n, WalkSystem::PlainWalk).unwrap();
            assert!(reports.iter().all(|r| !r.is_ambiguous()), "n={n}");
        }
    }

    #[test]
    fn per_step_traversals_total_2_to_n() {
        for system in [WalkSystem::PlainWalk, WalkSystem::IntegratedWalk] {
            for n in 1..=8u32 {
                let reports = link_reports(n, system).unwrap();
                for t in 1..=n {
                    let total: usize = reports
                        .iter()
                        .filter(|r| r.link.step == t)
                        .map(|r| r.words.len())
                        .sum();
                    assert_eq!(total, 1 << n, "{system:?} n={n} t={t}");
                }
            }
        }
    }

    #[test]
    fn cap_refusal() {
        assert_eq!(
            endpoint_classes(30, WalkSystem::PlainWalk).unwrap_err(),
            Error::EnumerationCapExceeded { n: 30, cap: 26 }
        );
        assert_eq!(
            link_reports_with_cap(9, WalkSystem::IntegratedWalk, 8).unwrap_err(),
            Error::EnumerationCapExceeded { n: 9, cap: 8 }
        );
    }

    proptest! {
        #[test]
        fn endpoint_is_affine_in_the_index(n in 0u32..=24, raw in proptest::num::u64::ANY) {
            let m = if n == 0 { 0 } else { raw & ((1u64 << n) - 1) };
            let w = word_from_ordinal(n, m).unwrap();

            let path = realize_path(w, WalkSystem::IntegratedWalk);
            let q_max = u64::from(n) * (u64::from(n) + 1) / 2;
            prop_assert_eq!(path.endpoint(), 2 * w.q_index() as i64 - q_max as i64);
            prop_assert_eq!(path.endpoint_index(), w.q_index());

            let path = realize_path(w, WalkSystem::PlainWalk);
            prop_assert_eq!(path.endpoint(), 2 * i64::from(w.p_index()) - i64::from(n));
            prop_assert_eq!(path.endpoint_index(), u64::from(w.p_index()));
        }

        #[test]
        fn positions_accumulate_angles(n in 0u32..=16, raw in proptest::num::u64::ANY) {
            let m = if n == 0 { 0 } else { raw & ((1u64 << n) - 1) };
            let w = word_from_ordinal(n, m).unwrap();
            for system in [WalkSystem::PlainWalk, WalkSystem::IntegratedWalk] {
                let path = realize_path(w, system);
                prop_assert_eq!(path.positions[0], 0);
                for t in 1..=n as usize {
                    prop_assert_eq!(path.positions[t], path.positions[t - 1] + path.angles[t - 1]);
                }
            }
        }
    }
}

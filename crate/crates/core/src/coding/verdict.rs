use serde::{Deserialize, Serialize};

use super::{generate, CodingError, CodingScheme, Word};

/// Words and admissible diagrams met by iterated normalize-and-derive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Itinerary {
    pub diagrams: Vec<usize>,
    /// `words[j]` is the window whose diagram is `diagrams[j]`.
    pub words: Vec<Word>,
}

/// Runs up to `rounds` renormalization rounds, stopping at the first error.
/// The itinerary has `rounds + 1` diagrams when no error occurs.
pub fn derivation_itinerary(
    scheme: &CodingScheme,
    w: &Word,
    rounds: usize,
) -> (Itinerary, Option<CodingError>) {
    let mut it = Itinerary { diagrams: Vec::new(), words: Vec::new() };
    let mut cur = w.clone();
    for j in 0..=rounds {
        let (n, k) = match scheme.normal_form(&cur) {
            Ok(x) => x,
            Err(e) => return (it, Some(e)),
        };
        it.diagrams.push(k);
        it.words.push(cur.clone());
        if j == rounds {
            break;
        }
        match super::derive_sandwich(&n) {
            Ok(d) if d.word.len() >= 2 => cur = d.word,
            Ok(_) | Err(_) => return (it, Some(CodingError::WindowTooShort)),
        }
    }
    (it, None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum VerdictStatus {
    Pass,
    Fail,
    Ambiguous,
    WindowTooShort,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    pub prefix: Vec<usize>,
    pub failing_step: Option<usize>,
}

impl Verdict {
    fn stop(status: VerdictStatus, prefix: Vec<usize>, step: usize) -> Self {
        Verdict { status, prefix, failing_step: Some(step) }
    }
}

/// Checks that the hexagon window `w` lies in the depth-`k` generation
/// cylinder of its own itinerary: every round has a unique diagram, later
/// rounds avoid the first sector, and regenerating each derived window
/// reproduces a piece of its parent.
pub fn characterize(scheme: &CodingScheme, w: &Word, depth: usize) -> Verdict {
    let mut prefix = Vec::new();
    let mut words: Vec<Word> = vec![w.clone()];
    for j in 0..=depth {
        let cur = words[j].clone();
        let k = match scheme.admissible(&cur).as_slice() {
            [] => return Verdict::stop(VerdictStatus::Fail, prefix, j),
            [k] => *k,
            _ => return Verdict::stop(VerdictStatus::Ambiguous, prefix, j),
        };
        if j > 0 {
            if k == 0 {
                return Verdict::stop(VerdictStatus::Fail, prefix, j);
            }
            let back = match generate(&cur, k, prefix[j - 1]) {
                Ok(b) => b,
                Err(_) => return Verdict::stop(VerdictStatus::Fail, prefix, j),
            };
            if back.find_in(&words[j - 1]).is_none() {
                return Verdict::stop(VerdictStatus::Fail, prefix, j);
            }
        }
        prefix.push(k);
        if j == depth {
            break;
        }
        let normal = scheme.symmetry.perms[k].apply_word(&cur).expect("letters of an admitted word");
        match super::derive_sandwich(&normal) {
            Ok(d) if d.word.len() >= 2 => words.push(d.word),
            _ => return Verdict::stop(VerdictStatus::WindowTooShort, prefix, j),
        }
    }
    Verdict { status: VerdictStatus::Pass, prefix, failing_step: None }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coding::hexagon_scheme;

    #[test]
    fn simple_verdicts() {
        let s = hexagon_scheme();
        let v = characterize(&s, &Word::from("AABB"), 3);
        assert_eq!(v.status, VerdictStatus::Fail);
        assert_eq!(v.failing_step, Some(0));
        assert_eq!(characterize(&s, &Word::from("BCBCBC"), 3).status, VerdictStatus::Ambiguous);
    }

    #[test]
    fn verdict_json_shape() {
        let v = Verdict { status: VerdictStatus::Pass, prefix: vec![0, 3], failing_step: None };
        let j = serde_json::to_string(&v).unwrap();
        assert_eq!(j, r#"{"status":"PASS","prefix":[0,3],"failing_step":null}"#);
    }
}

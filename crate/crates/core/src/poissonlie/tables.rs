//! Reference bracket tables, transcribed verbatim, and their comparison
//! with recomputed brackets.
//!
//! Transcription: `e^s` is written `E^2` (so `e^{-s} = E^-2`), Greek
//! letters are spelled out, and an empty cell is `0`. The OSp(1|2) table is
//! printed with every bracket doubled.

use std::fmt;

use super::{render_table, CoordinateRing, Group, PoissonError, PoissonStructure};
use crate::superscalar::{int, SuperScalar};

/// One printed column of a bracket table.
#[derive(Debug, Clone, Copy)]
pub struct ReferenceColumn {
    pub table: u8,
    pub label: &'static str,
    /// Structure name accepted by [`PoissonStructure::named`].
    pub structure: &'static str,
    /// Factor applied to recomputed brackets before comparison.
    pub scale: i64,
    /// `(left, right, printed)`; pairs not listed are empty cells.
    pub cells: &'static [(&'static str, &'static str, &'static str)],
}

/// Cells whose printed value is wrong, with the recomputed value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Erratum {
    pub table: u8,
    pub column: &'static str,
    pub left: &'static str,
    pub right: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub note: &'static str,
}

pub const ERRATA: &[Erratum] = &[
    Erratum {
        table: 1,
        column: "3",
        left: "b",
        right: "d",
        printed: "1-b^2-d^2)",
        corrected: "1-b^2-d^2",
        note: "stray closing parenthesis; the value without it matches",
    },
    Erratum {
        table: 2,
        column: "(v)",
        left: "a",
        right: "b",
        printed: "-b-E^2",
        corrected: "-b+c*s",
        note: "printed value is -1 at the identity; the extra cocycle term c*s is missing",
    },
];

const OSP_1: &[(&str, &str, &str)] = &[
    ("a", "b", "a^2+alpha*delta-1"),
    ("a", "c", "-c^2"),
    ("a", "d", "c*(a-d)"),
    ("b", "c", "-c*(a+d)"),
    ("b", "d", "1-d^2-alpha*delta"),
    ("c", "d", "c^2"),
    ("a", "alpha", "c*alpha - a*delta"),
    ("b", "alpha", "d*alpha-b*delta"),
    ("c", "alpha", "c*delta"),
    ("d", "alpha", "d*delta"),
    ("a", "delta", "-c*delta"),
    ("b", "delta", "-d*delta"),
    ("alpha", "alpha", "2*delta*alpha"),
];

const OSP_2: &[(&str, &str, &str)] = &[
    ("a", "b", "a^2-1"),
    ("a", "c", "-c^2"),
    ("a", "d", "c*(a-d)"),
    ("b", "c", "-c*(a+d)"),
    ("b", "d", "1-d^2"),
    ("c", "d", "c^2"),
    ("b", "alpha", "-a*alpha"),
    ("c", "alpha", "c*delta"),
    ("d", "alpha", "(d-a)*delta"),
    ("a", "delta", "-c*delta"),
    ("b", "delta", "-d*delta-c*alpha"),
    ("d", "delta", "-c*delta"),
    ("alpha", "alpha", "1-a^2"),
    ("alpha", "delta", "-a*c"),
    ("delta", "delta", "-c^2"),
];

const OSP_3: &[(&str, &str, &str)] = &[
    ("a", "b", "a^2+b^2-1"),
    ("a", "c", "1-c^2-a^2"),
    ("a", "d", "(c-b)*(a-d)"),
    ("b", "c", "-(b+c)*(a+d)"),
    ("b", "d", "1-b^2-d^2)"),
    ("c", "d", "c^2+d^2-1"),
    ("a", "alpha", "b*alpha"),
    ("b", "alpha", "-a*alpha"),
    ("c", "alpha", "c*delta+a*alpha+b*delta"),
    ("d", "alpha", "d*delta+b*alpha-a*delta"),
    ("a", "delta", "-c*delta-a*alpha+d*alpha"),
    ("b", "delta", "-(d*delta+b*alpha+c*alpha)"),
    ("c", "delta", "d*delta"),
    ("d", "delta", "-c*delta"),
    ("alpha", "alpha", "1-a^2-b^2"),
    ("alpha", "delta", "-a*c-b*d"),
    ("delta", "delta", "1-c^2-d^2"),
];

const E2_I: &[(&str, &str, &str)] = &[("a", "b", "c*s")];

const E2_II: &[(&str, &str, &str)] =
    &[("a", "b", "-b+c*s"), ("a", "e^s", "1-E^2"), ("a", "xi", "xi/2"), ("a", "eta", "-eta/2")];

const E2_III: &[(&str, &str, &str)] = &[
    ("a", "b", "a-b+c*s"),
    ("a", "e^s", "1-E^2"),
    ("b", "e^s", "E^2-E^4"),
    ("a", "xi", "xi/2"),
    ("a", "eta", "xi-(eta/2)"),
    ("b", "xi", "eta-(xi/2)"),
    ("b", "eta", "eta/2"),
];

const E2_IV: &[(&str, &str, &str)] = &[
    ("a", "b", "-2*a*b"),
    ("a", "e^s", "-2*a*E^2"),
    ("b", "e^s", "-2*b*E^2"),
    ("a", "eta", "-a*eta"),
    ("b", "xi", "xi*b"),
    ("e^s", "xi", "xi*E^2"),
    ("e^s", "eta", "eta*E^2"),
    ("xi", "xi", "-2*a"),
    ("xi", "eta", "-xi*eta/2"),
    ("eta", "eta", "2*b"),
];

const E2_V: &[(&str, &str, &str)] = &[
    ("a", "b", "-b-E^2"),
    ("a", "e^s", "1-E^2"),
    ("a", "xi", "-xi*E^-2/2"),
    ("a", "eta", "-eta/2"),
    ("xi", "xi", "E^-2-1"),
];

const E2_VI: &[(&str, &str, &str)] = &[
    ("a", "b", "a-b+c*s"),
    ("a", "e^s", "1-E^2"),
    ("b", "e^s", "E^2 - E^4"),
    ("a", "xi", "-xi*E^-2/2"),
    ("a", "eta", "-eta/2"),
    ("b", "xi", "-xi/2"),
    ("b", "eta", "-eta*E^2/2"),
    ("xi", "xi", "E^-2-1"),
    ("eta", "eta", "E^2-1"),
];

/// The printed columns for one group. The OSp(1|2) columns are the
/// structures of `r1`, `r2` and `r3` at `t = 1`.
pub fn reference_columns(group: Group) -> Vec<ReferenceColumn> {
    let col = |table, label, structure, scale, cells| ReferenceColumn { table, label, structure, scale, cells };
    match group {
        Group::Osp12 => vec![col(1, "1", "r1", 2, OSP_1), col(1, "2", "r2", 2, OSP_2), col(1, "3", "r3", 2, OSP_3)],
        Group::SuperE2 => vec![
            col(2, "(i)", "i", 1, E2_I),
            col(2, "(ii)", "ii", 1, E2_II),
            col(2, "(iii)", "iii", 1, E2_III),
            col(2, "(iv)", "iv", 1, E2_IV),
            col(2, "(v)", "v", 1, E2_V),
            col(2, "(vi)", "vi", 1, E2_VI),
        ],
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum CellStatus {
    Match,
    /// The printed value parses but differs from the recomputation.
    Mismatch,
    /// The printed value is not a well-formed expression.
    Unparseable(String),
}

#[derive(Debug, Clone)]
pub struct CellCheck {
    pub left: String,
    pub right: String,
    pub printed: String,
    pub computed: SuperScalar,
    pub status: CellStatus,
    /// The printed value is nonzero at the identity, which no Poisson-Lie
    /// bracket can be.
    pub printed_nonzero_at_identity: bool,
    pub erratum: Option<Erratum>,
}

impl CellCheck {
    pub fn is_match(&self) -> bool {
        self.status == CellStatus::Match
    }
}

impl fmt::Display for CellCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match &self.status {
            CellStatus::Match => "match".to_string(),
            CellStatus::Mismatch => "MISMATCH".to_string(),
            CellStatus::Unparseable(e) => format!("UNPARSEABLE ({e})"),
        };
        write!(f, "{{{},{}}}\tprinted {}\tcomputed {}\t{status}", self.left, self.right, self.printed, self.computed)?;
        if let Some(e) = &self.erratum {
            write!(f, "\tknown erratum: {}", e.note)?;
        }
        Ok(())
    }
}

/// Recomputes a column and compares every cell with the printed value.
pub fn compare_column(cr: &CoordinateRing, col: &ReferenceColumn) -> Result<Vec<CellCheck>, PoissonError> {
    let p = PoissonStructure::named(cr, col.structure)?;
    let table = render_table(cr, &p).scaled(&int(col.scale));
    let mut out = Vec::new();
    for row in &table.rows {
        let printed = col.cells.iter().find(|(l, r, _)| *l == row.left && *r == row.right).map_or("0", |c| c.2);
        let (status, nonzero) = match cr.parse(printed) {
            Ok(v) => {
                let status = if v == row.value { CellStatus::Match } else { CellStatus::Mismatch };
                (status, !cr.at_identity(&v).is_zero())
            }
            Err(e) => (CellStatus::Unparseable(e.to_string()), false),
        };
        let erratum = ERRATA
            .iter()
            .find(|e| e.table == col.table && e.column == col.label && e.left == row.left && e.right == row.right)
            .copied();
        out.push(CellCheck {
            left: row.left.clone(),
            right: row.right.clone(),
            printed: printed.to_string(),
            computed: row.value.clone(),
            status,
            printed_nonzero_at_identity: nonzero,
            erratum,
        });
    }
    Ok(out)
}

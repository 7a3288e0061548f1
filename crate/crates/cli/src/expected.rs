//! Expected values loaded from `data/expected.json`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

pub const EXPECTED_JSON: &str = include_str!("../data/expected.json");
pub const SUPPORTED_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Expected {
    pub version: u32,
    pub lift: Vec<LiftExpect>,
    pub h3: H3Expect,
    pub f4: F4Expect,
    pub xj: Vec<XjExpect>,
    pub zinde: Vec<ZindeExpect>,
    pub rank2: Rank2Expect,
    pub small: Vec<SmallExpect>,
    pub obstruct: Vec<ObstructExpect>,
    pub reproduce: Vec<ReproduceExpect>,
    pub table1: Table1Expect,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LiftExpect {
    pub case: String,
    pub x_sizes: Option<Vec<usize>>,
    pub y_sizes: Option<Vec<usize>>,
    pub epimorphisms: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct H3Expect {
    pub c2: usize,
    pub x1: usize,
    pub x2: usize,
    pub y: usize,
    pub all_generate: bool,
    pub matches: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct F4Expect {
    pub classes: usize,
    pub order_ge3: usize,
    pub pairs: usize,
    pub triples: usize,
    pub quadruples: usize,
    pub generating: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XjCount {
    /// 1-based nodes.
    pub j: Vec<usize>,
    pub count: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct XjExpect {
    #[serde(rename = "type")]
    pub ty: String,
    pub classes: usize,
    /// 1-based placement order.
    pub order: Vec<usize>,
    pub large: bool,
    pub counts: Vec<XjCount>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ZindeExpect {
    #[serde(rename = "type")]
    pub ty: String,
    pub n: usize,
    pub classes: Option<usize>,
    pub joint_classes: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Rank2Expect {
    pub max_m: u32,
    pub extraordinary_m: Vec<u32>,
    pub classes_each: usize,
    pub names: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SmallExpect {
    #[serde(rename = "type")]
    pub ty: String,
    pub m: Option<u32>,
    /// Catalog names per extraordinary class.
    pub extraordinary: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ObstructExpect {
    #[serde(rename = "type")]
    pub ty: String,
    pub nu: String,
    pub verdict: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReproduceExpect {
    pub case: String,
    pub tables: usize,
    pub equations: usize,
    pub sum: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Row {
    pub row: String,
    pub maps: Vec<String>,
    pub instances: Vec<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Table1Expect {
    pub rows: Vec<Table1Row>,
    pub absent: Vec<String>,
}

/// The embedded expectations. Panics if the embedded file is malformed,
/// which the test suite rules out.
pub fn expected() -> &'static Expected {
    static CELL: OnceLock<Expected> = OnceLock::new();
    CELL.get_or_init(|| {
        let e: Expected = serde_json::from_str(EXPECTED_JSON).expect("embedded expected.json parses");
        assert_eq!(e.version, SUPPORTED_VERSION, "expected.json version");
        e
    })
}

impl Expected {
    pub fn lift(&self, case: &str) -> Option<&LiftExpect> {
        self.lift.iter().find(|l| l.case == case)
    }

    pub fn xj(&self, ty: &str) -> Option<&XjExpect> {
        self.xj.iter().find(|x| x.ty.eq_ignore_ascii_case(ty))
    }

    pub fn zinde(&self, ty: &str, n: usize) -> Option<&ZindeExpect> {
        self.zinde.iter().find(|z| z.ty.eq_ignore_ascii_case(ty) && z.n == n)
    }

    pub fn small(&self, label: &str) -> Option<&SmallExpect> {
        self.small.iter().find(|s| s.label() == label)
    }

    pub fn reproduce(&self, case: &str) -> Option<&ReproduceExpect> {
        self.reproduce.iter().find(|r| r.case.eq_ignore_ascii_case(case))
    }

    pub fn obstruct(&self, ty: &str, nu: &str) -> Option<&ObstructExpect> {
        self.obstruct.iter().find(|o| o.ty == ty && o.nu == nu)
    }
}

impl SmallExpect {
    /// `I2(8)`, `B3`, …, matching `CoxeterGraph::label`.
    pub fn label(&self) -> String {
        match self.m {
            Some(m) => format!("{}({m})", self.ty),
            None => self.ty.clone(),
        }
    }
}

use std::fmt::Write as _;
use std::path::Path;

use isotypic::admissible::{admissible_set, effective_threshold_for, fat_hook_check, is_admissible};
use isotypic::bounds::{BoundCalculator, BoundParams, BoundReport};
use isotypic::induction::{split_module, split_multiplicity, young_module};
use isotypic::orbit::{
    example_variety, h0_decomposition, mv_check, orbit_intersection, orbit_union, top_cohomology,
    verify_power_identity, OrbitSpec,
};
use isotypic::partition::{count_partitions, enumerate_partitions};
use isotypic::tableaux::{kostka, lr_coefficient, specht_dim};
use isotypic::{Decomposition, Error, Partition, PartitionTuple};
use num_bigint::BigUint;
use serde::Serialize;

use crate::args::{BoundArg, BoundFlags, Command, Format};

/// Errors surfaced to the user, each with a fixed exit code.
#[derive(Debug)]
pub enum CliError {
    Lib(Error),
    Argument { name: &'static str, input: String, source: Error },
    Io { path: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        let lib = match self {
            CliError::Lib(e) | CliError::Argument { source: e, .. } => e,
            CliError::Io { .. } => return 3,
        };
        match lib {
            Error::Parse { .. } => 2,
            Error::Domain(_) => 3,
            Error::CapExceeded { .. } => 4,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Argument { name, input, source } => write!(f, "invalid {name} `{input}`: {source}"),
            CliError::Io { path, source } => write!(f, "cannot read {path}: {source}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn partition(name: &'static str, input: &str) -> Result<Partition> {
    input.parse().map_err(|source| CliError::Argument { name, input: input.to_string(), source })
}

fn tuple(name: &'static str, input: &str) -> Result<PartitionTuple> {
    input.parse().map_err(|source| CliError::Argument { name, input: input.to_string(), source })
}

fn check_cap(terms: BigUint, cap: u64) -> Result<()> {
    if terms > BigUint::from(cap) {
        return Err(Error::CapExceeded { terms: terms.to_string(), cap }.into());
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output serializes")
}

#[derive(Serialize)]
struct Scalar<'a> {
    #[serde(skip_serializing_if = "Vec::is_empty")]
    args: Vec<&'a str>,
    value: String,
}

fn scalar(format: Format, args: Vec<&str>, value: BigUint) -> String {
    match format {
        Format::Text => value.to_string(),
        Format::Json => json(&Scalar { args, value: value.to_string() }),
    }
}

fn decomposition(format: Format, d: &Decomposition) -> String {
    match format {
        Format::Text => d.to_string(),
        Format::Json => d.to_json(),
    }
}

pub fn run(command: &Command, format: Format, cap: u64) -> Result<String> {
    match command {
        Command::Partitions { k, max_len } => {
            check_cap(count_partitions(*k, *max_len), cap)?;
            let all: Vec<String> = enumerate_partitions(*k, *max_len).iter().map(|p| p.to_string()).collect();
            Ok(match format {
                Format::Text => all.join("\n"),
                Format::Json => json(&all),
            })
        }
        Command::Dim { lambda } => {
            let lam = partition("partition", lambda)?;
            Ok(scalar(format, vec![lambda], specht_dim(&lam)))
        }
        Command::Kostka { mu, lambda } => {
            let value = kostka(&partition("mu", mu)?, &partition("lambda", lambda)?)?;
            Ok(scalar(format, vec![mu, lambda], value))
        }
        Command::Lr { nu, lambda, mu } => {
            let value = lr_coefficient(&partition("nu", nu)?, &partition("lambda", lambda)?, &partition("mu", mu)?)?;
            Ok(scalar(format, vec![nu, lambda, mu], value))
        }
        Command::Young { lambda } => {
            let lam = partition("partition", lambda)?;
            check_cap(count_partitions(lam.weight(), None), cap)?;
            Ok(decomposition(format, &young_module(&lam)))
        }
        Command::SplitMult { mu, trivial, sign } => {
            let (t, s) = (partition("trivial blocks", trivial)?, partition("sign blocks", sign)?);
            let value = split_multiplicity(&partition("mu", mu)?, &t, &s)?;
            Ok(scalar(format, vec![mu, trivial, sign], value))
        }
        Command::SplitModule { trivial, sign } => {
            let (t, s) = (partition("trivial blocks", trivial)?, partition("sign blocks", sign)?);
            check_cap(count_partitions(t.weight() + s.weight(), None), cap)?;
            Ok(decomposition(format, &split_module(&t, &s)))
        }
        Command::Iset { k, d, m, enumerate, member } => iset(*k, *d, *m, *enumerate, member.as_deref(), format, cap),
        Command::Bound { kind, params } => bound(*kind, params, format, cap),
        Command::Example { k, top, verify_identity } => example(*k, *top, *verify_identity, format, cap),
        Command::MvCheck { first, second } => mv(first, second, format, cap),
    }
}

#[derive(Serialize)]
struct IsetOut {
    k: String,
    d: String,
    m: String,
    threshold: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    count: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    members: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mu: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    member: Option<bool>,
}

fn iset(k: usize, d: usize, m: usize, enumerate: bool, member: Option<&str>, format: Format, cap: u64) -> Result<String> {
    let t = effective_threshold_for(k, d, m)?;
    let mut out = IsetOut {
        k: k.to_string(),
        d: d.to_string(),
        m: m.to_string(),
        threshold: t.to_string(),
        count: None,
        members: None,
        mu: None,
        member: None,
    };
    // The search walks every lambda with at most t rows and builds modules over all of Par(k).
    let work = count_partitions(k, Some(t)) * count_partitions(k, None);
    if let Some(text) = member {
        let mu = partition("mu", text)?;
        if mu.weight() != k {
            return Err(Error::Domain(format!("{mu} is not a partition of {k}")).into());
        }
        // Failing the fat-hook test settles non-membership without any enumeration.
        let found = if fat_hook_check(&mu, t) {
            check_cap(work, cap)?;
            is_admissible(&mu, d, m)?
        } else {
            false
        };
        return Ok(match format {
            Format::Text => if found { "member" } else { "not a member" }.to_string(),
            Format::Json => {
                out.mu = Some(mu.to_string());
                out.member = Some(found);
                json(&out)
            }
        });
    }
    check_cap(work, cap)?;
    let set = admissible_set(k, d, m)?;
    let members: Vec<String> = set.members().iter().map(|p| p.to_string()).collect();
    Ok(match (format, enumerate) {
        (Format::Text, true) => members.join("\n"),
        (Format::Text, false) => members.len().to_string(),
        (Format::Json, _) => {
            out.count = Some(members.len().to_string());
            out.members = enumerate.then_some(members);
            json(&out)
        }
    })
}

fn bound(kind: BoundArg, flags: &BoundFlags, format: Format, cap: u64) -> Result<String> {
    let calc = BoundCalculator::new(cap);
    let m = if flags.m.is_empty() { vec![1; flags.k.len()] } else { flags.m.clone() };
    let single_k = || match flags.k.as_slice() {
        [k] => Ok(*k),
        _ => Err(Error::Domain("this bound takes a single --k".into())),
    };
    let single_m = || match m.as_slice() {
        [m] => Ok(*m),
        _ => Err(Error::Domain("this bound takes a single --m".into())),
    };
    let mu = flags.mu.as_deref().map(|s| tuple("mu", s)).transpose()?;
    let report = match kind {
        BoundArg::Affine => calc.affine(mu.as_ref(), &BoundParams::new(flags.k.clone(), m, flags.d)?)?,
        BoundArg::Sa => {
            let s = flags.s.ok_or_else(|| Error::Domain("the sa bound needs --s".into()))?;
            let params = BoundParams::new(flags.k.clone(), m, flags.d)?.with_polynomials(s)?;
            calc.semi_algebraic(mu.as_ref(), &params)?
        }
        BoundArg::Complex => calc.complex(mu.as_ref(), &BoundParams::new(flags.k.clone(), m, flags.d)?)?,
        BoundArg::Projective => {
            let k = single_k()?;
            let target = match mu {
                Some(t) if t.arity() == 1 => Some(t.into_components().remove(0)),
                Some(t) => return Err(Error::Domain(format!("projective target {t} must be a single partition")).into()),
                None => None,
            };
            calc.projective(k, flags.d, flags.letters.unwrap_or(k + 1), target.as_ref())?
        }
        BoundArg::Equivariant => calc.equivariant(&BoundParams::new(flags.k.clone(), m, flags.d)?)?,
        BoundArg::Projection => calc.projection_image(single_k()?, single_m()?, flags.d)?,
    };
    Ok(match format {
        Format::Text => report_text(&report),
        Format::Json => report.to_json(),
    })
}

fn list(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn report_text(r: &BoundReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "theorem: {}", r.theorem);
    let _ = write!(s, "k: {}  m: {}  d: {}", list(&r.params.k), list(&r.params.m), r.params.d);
    if let Some(p) = r.params.s {
        let _ = write!(s, "  s: {p}");
    }
    s.push('\n');
    if let Some(t) = &r.target {
        let _ = writeln!(s, "target: {t}");
    }
    let _ = writeln!(s, "excluded: {}", r.excluded);
    let _ = writeln!(s, "value: {}", r.value);
    let _ = write!(s, "asymptotic: {}", r.asymptotic_note);
    s
}

#[derive(Serialize)]
struct IdentityOut {
    lhs: String,
    rhs: String,
    holds: bool,
}

#[derive(Serialize)]
struct ExampleOut<'a> {
    k: String,
    degree: &'static str,
    decomposition: &'a Decomposition,
    #[serde(skip_serializing_if = "Option::is_none")]
    identity: Option<IdentityOut>,
}

fn example(k: usize, top: bool, verify: bool, format: Format, cap: u64) -> Result<String> {
    check_cap(count_partitions(k, None), cap)?;
    let h0 = h0_decomposition(&example_variety(k)?);
    let d = if top { top_cohomology(&h0) } else { h0 };
    let identity = if verify {
        let id = verify_power_identity(k)?;
        Some(IdentityOut { lhs: id.lhs.to_string(), rhs: id.rhs.to_string(), holds: id.holds() })
    } else {
        None
    };
    Ok(match format {
        Format::Text => {
            let mut s = d.to_string();
            if let Some(id) = identity {
                let verdict = if id.holds { "holds" } else { "fails" };
                let _ = write!(s, "\nidentity: k! * sum = {}, 2^k = {} ({verdict})", id.lhs, id.rhs);
            }
            s
        }
        Format::Json => json(&ExampleOut {
            k: k.to_string(),
            degree: if top { "top" } else { "0" },
            decomposition: &d,
            identity,
        }),
    })
}

fn read_spec(path: &Path) -> Result<OrbitSpec> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    OrbitSpec::from_json(&text).map_err(|source| CliError::Argument { name: "orbit spec", input: path.display().to_string(), source })
}

#[derive(Serialize)]
struct MvRow {
    mu: String,
    first: String,
    second: String,
    union: String,
    intersection: String,
}

#[derive(Serialize)]
struct MvOut {
    holds: bool,
    rows: Vec<MvRow>,
}

fn mv(first: &Path, second: &Path, format: Format, cap: u64) -> Result<String> {
    let (a, b) = (read_spec(first)?, read_spec(second)?);
    check_cap(count_partitions(a.k(), None), cap)?;
    let (union, inter) = (orbit_union(&a, &b)?, orbit_intersection(&a, &b)?);
    let ds = [&a, &b, &union, &inter].map(h0_decomposition);
    let holds = mv_check(&ds[0], &ds[1], &ds[2], &ds[3])?;
    let mut keys: Vec<&PartitionTuple> = ds.iter().flat_map(|d| d.support()).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<MvRow> = keys
        .into_iter()
        .map(|key| {
            let [first, second, union, intersection] = ds.each_ref().map(|d| d.multiplicity(key).to_string());
            MvRow { mu: key.to_string(), first, second, union, intersection }
        })
        .collect();
    Ok(match format {
        Format::Text => {
            let mut s = String::new();
            for r in &rows {
                let _ = writeln!(s, "{}: {} + {} <= {} + {}", r.mu, r.first, r.second, r.union, r.intersection);
            }
            s.push_str(if holds { "holds" } else { "fails" });
            s
        }
        Format::Json => json(&MvOut { holds, rows }),
    })
}

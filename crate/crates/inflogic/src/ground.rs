//! A mini rule language with cardinality aggregates, grounded over a
//! depth-bounded term universe.
//!
//! Rules have an atom head (or `#false` for constraints) and a body of
//! literals, cardinality aggregates, and inequality guards.  Variables
//! occurring anywhere outside an aggregate are global and range over the
//! whole universe; variables local to an aggregate enumerate its domain.
//! Each ground rule becomes the implication `body -> head` (facts become
//! bare atoms); aggregates compile to the conjunction, over every subset
//! of the domain violating the bounds, of "the subset implies the rest".

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::atom::{Atom, Signature};
use crate::formula::Formula;
use crate::semantics::{stable_models, SemanticsError, StableModelReport, Theory};

/// A variable-free term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GroundTerm {
    pub symbol: String,
    pub args: Vec<GroundTerm>,
}

impl GroundTerm {
    pub fn constant(symbol: impl Into<String>) -> Self {
        GroundTerm {
            symbol: symbol.into(),
            args: Vec::new(),
        }
    }

    /// Constants have depth 1; an application is one deeper than its
    /// deepest argument.
    pub fn depth(&self) -> usize {
        1 + self.args.iter().map(GroundTerm::depth).max().unwrap_or(0)
    }
}

impl fmt::Display for GroundTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.symbol)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (k, a) in self.args.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// A term pattern: a variable or a symbol applied to patterns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Term {
    Var(String),
    Fun(String, Vec<Term>),
}

impl Term {
    pub fn constant(symbol: impl Into<String>) -> Self {
        Term::Fun(symbol.into(), Vec::new())
    }

    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    fn collect_vars(&self, into: &mut BTreeSet<String>) {
        match self {
            Term::Var(v) => {
                into.insert(v.clone());
            }
            Term::Fun(_, args) => {
                for a in args {
                    a.collect_vars(into);
                }
            }
        }
    }

    fn collect_functions(&self, into: &mut BTreeSet<(String, usize)>) {
        if let Term::Fun(name, args) = self {
            into.insert((name.clone(), args.len()));
            for a in args {
                a.collect_functions(into);
            }
        }
    }

    fn instantiate(&self, binding: &BTreeMap<String, GroundTerm>) -> GroundTerm {
        match self {
            Term::Var(v) => binding
                .get(v)
                .cloned()
                .expect("all variables are bound after validation"),
            Term::Fun(name, args) => GroundTerm {
                symbol: name.clone(),
                args: args.iter().map(|a| a.instantiate(binding)).collect(),
            },
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Fun(name, args) => {
                f.write_str(name)?;
                if !args.is_empty() {
                    f.write_str("(")?;
                    for (k, a) in args.iter().enumerate() {
                        if k > 0 {
                            f.write_str(",")?;
                        }
                        write!(f, "{a}")?;
                    }
                    f.write_str(")")?;
                }
                Ok(())
            }
        }
    }
}

/// An atom pattern: predicate applied to term patterns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct AtomSchema {
    pub predicate: String,
    pub args: Vec<Term>,
}

impl AtomSchema {
    pub fn new(predicate: impl Into<String>, args: impl IntoIterator<Item = Term>) -> Self {
        AtomSchema {
            predicate: predicate.into(),
            args: args.into_iter().collect(),
        }
    }

    pub fn vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        for a in &self.args {
            a.collect_vars(&mut out);
        }
        out
    }

    fn instantiate(&self, binding: &BTreeMap<String, GroundTerm>) -> Atom {
        let ground: Vec<GroundTerm> = self.args.iter().map(|a| a.instantiate(binding)).collect();
        render_atom(&self.predicate, &ground)
    }

    fn max_instantiated_depth(&self, binding: &BTreeMap<String, GroundTerm>) -> usize {
        self.args
            .iter()
            .map(|a| a.instantiate(binding).depth())
            .max()
            .unwrap_or(0)
    }
}

impl fmt::Display for AtomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.predicate)?;
        if !self.args.is_empty() {
            f.write_str("(")?;
            for (k, a) in self.args.iter().enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

fn render_atom(predicate: &str, args: &[GroundTerm]) -> Atom {
    let mut name = String::from(predicate);
    if !args.is_empty() {
        name.push('(');
        for (k, a) in args.iter().enumerate() {
            if k > 0 {
                name.push(',');
            }
            name.push_str(&a.to_string());
        }
        name.push(')');
    }
    Atom::new(name).expect("rendered ground atoms are valid")
}

/// `lower { schema , guards } upper` — a bound-constrained count of the
/// true instances of the schema.  At least one bound is present.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CardinalityAggregate {
    pub lower: Option<u64>,
    pub upper: Option<u64>,
    pub schema: AtomSchema,
    pub guards: Vec<(String, String)>,
}

impl fmt::Display for CardinalityAggregate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(l) = self.lower {
            write!(f, "{l}")?;
        }
        write!(f, "{{{}", self.schema)?;
        for (x, y) in &self.guards {
            write!(f, ", {x} != {y}")?;
        }
        f.write_str("}")?;
        if let Some(u) = self.upper {
            write!(f, "{u}")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BodyElem {
    Pos(AtomSchema),
    Neg(AtomSchema),
    Agg(CardinalityAggregate),
    /// Inequality between two (global) variables, resolved while grounding.
    Neq(String, String),
}

impl fmt::Display for BodyElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BodyElem::Pos(a) => write!(f, "{a}"),
            BodyElem::Neg(a) => write!(f, "not {a}"),
            BodyElem::Agg(agg) => write!(f, "{agg}"),
            BodyElem::Neq(x, y) => write!(f, "{x} != {y}"),
        }
    }
}

/// `head :- body.` with `head = None` for a constraint (`#false`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProgramRule {
    pub head: Option<AtomSchema>,
    pub body: Vec<BodyElem>,
}

impl ProgramRule {
    pub fn new(head: Option<AtomSchema>, body: impl IntoIterator<Item = BodyElem>) -> Self {
        ProgramRule {
            head,
            body: body.into_iter().collect(),
        }
    }

    pub fn fact(head: AtomSchema) -> Self {
        ProgramRule {
            head: Some(head),
            body: Vec::new(),
        }
    }
}

impl fmt::Display for ProgramRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.head {
            Some(h) => write!(f, "{h}")?,
            None => f.write_str("#false")?,
        }
        if !self.body.is_empty() {
            f.write_str(" :- ")?;
            for (k, e) in self.body.iter().enumerate() {
                if k > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{e}")?;
            }
        }
        f.write_str(".")
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Program {
    pub rules: Vec<ProgramRule>,
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rules {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// All ground terms of depth at most the bound, buildable from the
/// program's constants and function symbols.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroundUniverse {
    terms: BTreeSet<GroundTerm>,
    depth_bound: usize,
}

impl GroundUniverse {
    /// A universe with an explicit term set; the depth bound still limits
    /// the instances grounding may build on top of these terms.
    pub fn new(terms: impl IntoIterator<Item = GroundTerm>, depth_bound: usize) -> Self {
        GroundUniverse {
            terms: terms.into_iter().collect(),
            depth_bound,
        }
    }

    pub fn terms(&self) -> &BTreeSet<GroundTerm> {
        &self.terms
    }

    pub fn depth_bound(&self) -> usize {
        self.depth_bound
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroundError {
    /// The program declares no constants, so the universe is undefined.
    NoConstants,
    /// A global variable occurs neither in the head nor in a positive body
    /// literal, or a guard mentions a variable bound nowhere.
    UnsafeVariable { rule: usize, variable: String },
    /// An aggregate domain too large to expand into the subset conjunction.
    AggregateDomainTooLarge { size: usize, limit: usize },
}

impl fmt::Display for GroundError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroundError::NoConstants => f.write_str("program declares no constants"),
            GroundError::UnsafeVariable { rule, variable } => {
                write!(f, "rule {}: unsafe variable {variable}", rule + 1)
            }
            GroundError::AggregateDomainTooLarge { size, limit } => {
                write!(f, "aggregate domain has {size} atoms, limit is {limit}")
            }
        }
    }
}

impl core::error::Error for GroundError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveError {
    Ground(GroundError),
    Semantics(SemanticsError),
}

impl fmt::Display for SolveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolveError::Ground(e) => write!(f, "{e}"),
            SolveError::Semantics(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for SolveError {}

impl From<GroundError> for SolveError {
    fn from(e: GroundError) -> Self {
        SolveError::Ground(e)
    }
}

impl From<SemanticsError> for SolveError {
    fn from(e: SemanticsError) -> Self {
        SolveError::Semantics(e)
    }
}

fn atom_schemas(rule: &ProgramRule) -> impl Iterator<Item = &AtomSchema> {
    rule.head.iter().chain(rule.body.iter().filter_map(|e| match e {
        BodyElem::Pos(a) | BodyElem::Neg(a) => Some(a),
        BodyElem::Agg(agg) => Some(&agg.schema),
        BodyElem::Neq(..) => None,
    }))
}

/// Every ground term of depth at most `depth_bound` over the program's
/// constants and function symbols, in term order.
pub fn herbrand_universe(
    program: &Program,
    depth_bound: usize,
) -> Result<GroundUniverse, GroundError> {
    let mut functions: BTreeSet<(String, usize)> = BTreeSet::new();
    for rule in &program.rules {
        for schema in atom_schemas(rule) {
            for arg in &schema.args {
                arg.collect_functions(&mut functions);
            }
        }
    }
    if !functions.iter().any(|(_, arity)| *arity == 0) {
        return Err(GroundError::NoConstants);
    }

    let mut terms: BTreeSet<GroundTerm> = functions
        .iter()
        .filter(|(_, arity)| *arity == 0)
        .filter(|_| depth_bound >= 1)
        .map(|(name, _)| GroundTerm::constant(name.clone()))
        .collect();
    loop {
        let mut fresh: BTreeSet<GroundTerm> = BTreeSet::new();
        for (name, arity) in functions.iter().filter(|(_, a)| *a > 0) {
            let pool: Vec<GroundTerm> = terms.iter().cloned().collect();
            for args in tuples(&pool, *arity) {
                let term = GroundTerm {
                    symbol: name.clone(),
                    args,
                };
                if term.depth() <= depth_bound && !terms.contains(&term) {
                    fresh.insert(term);
                }
            }
        }
        if fresh.is_empty() {
            break;
        }
        terms.extend(fresh);
    }
    Ok(GroundUniverse {
        terms,
        depth_bound,
    })
}

fn tuples<T: Clone>(pool: &[T], arity: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = alloc::vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for partial in &out {
            for item in pool {
                let mut v = partial.clone();
                v.push(item.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

const AGGREGATE_DOMAIN_LIMIT: usize = 16;

/// The subset translation of a cardinality aggregate over a fixed domain of
/// ground atoms: the conjunction, over every subset violating the bounds,
/// of "the subset's conjunction implies the disjunction of the rest".
pub fn translate_aggregate(
    lower: Option<u64>,
    upper: Option<u64>,
    domain: &BTreeSet<Atom>,
) -> Result<Formula, GroundError> {
    if domain.len() > AGGREGATE_DOMAIN_LIMIT {
        return Err(GroundError::AggregateDomainTooLarge {
            size: domain.len(),
            limit: AGGREGATE_DOMAIN_LIMIT,
        });
    }
    let atoms: Vec<&Atom> = domain.iter().collect();
    let violates = |count: u32| {
        lower.is_some_and(|l| u64::from(count) < l)
            || upper.is_some_and(|u| u64::from(count) > u)
    };
    let mut conjuncts = BTreeSet::new();
    for mask in 0u64..(1u64 << atoms.len()) {
        if !violates(mask.count_ones()) {
            continue;
        }
        let selected = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) != 0)
            .map(|(_, a)| Formula::atom((*a).clone()));
        let rest = atoms
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1u64 << k) == 0)
            .map(|(_, a)| Formula::atom((*a).clone()));
        conjuncts.insert(Formula::imp(Formula::conj(selected), Formula::disj(rest)));
    }
    Ok(Formula::Conj(conjuncts))
}

// Per-rule variable classification and safety validation.
struct RuleVars {
    globals: Vec<String>,
}

fn classify(rule: &ProgramRule, index: usize) -> Result<RuleVars, GroundError> {
    let mut outside: BTreeSet<String> = BTreeSet::new();
    if let Some(h) = &rule.head {
        outside.extend(h.vars());
    }
    for e in &rule.body {
        match e {
            BodyElem::Pos(a) | BodyElem::Neg(a) => outside.extend(a.vars()),
            BodyElem::Neq(x, y) => {
                outside.insert(x.clone());
                outside.insert(y.clone());
            }
            BodyElem::Agg(_) => {}
        }
    }

    let mut anchored: BTreeSet<String> = BTreeSet::new();
    if let Some(h) = &rule.head {
        anchored.extend(h.vars());
    }
    for e in &rule.body {
        if let BodyElem::Pos(a) = e {
            anchored.extend(a.vars());
        }
    }
    if let Some(v) = outside.iter().find(|v| !anchored.contains(*v)) {
        return Err(GroundError::UnsafeVariable {
            rule: index,
            variable: v.clone(),
        });
    }

    // Guard variables inside an aggregate must be bound by its schema or be
    // global.
    for e in &rule.body {
        if let BodyElem::Agg(agg) = e {
            let bound: BTreeSet<String> =
                agg.schema.vars().union(&outside).cloned().collect();
            for (x, y) in &agg.guards {
                for v in [x, y] {
                    if !bound.contains(v) {
                        return Err(GroundError::UnsafeVariable {
                            rule: index,
                            variable: v.clone(),
                        });
                    }
                }
            }
        }
    }

    Ok(RuleVars {
        globals: outside.into_iter().collect(),
    })
}

/// Ground every rule over every assignment of universe terms to its global
/// variables.  The theory's signature is every atom constructible from the
/// program's predicates over the universe; instances that would mention a
/// term deeper than the bound are dropped, which is the truncation the
/// depth bound stands for.
pub fn ground(program: &Program, universe: &GroundUniverse) -> Result<Theory, GroundError> {
    let classified: Vec<RuleVars> = program
        .rules
        .iter()
        .enumerate()
        .map(|(k, r)| classify(r, k))
        .collect::<Result<_, _>>()?;

    // Signature: all predicate instantiations over the universe.
    let mut predicates: BTreeSet<(String, usize)> = BTreeSet::new();
    for rule in &program.rules {
        for schema in atom_schemas(rule) {
            predicates.insert((schema.predicate.clone(), schema.args.len()));
        }
    }
    let pool: Vec<GroundTerm> = universe.terms.iter().cloned().collect();
    let mut signature = Signature::default();
    for (name, arity) in &predicates {
        for args in tuples(&pool, *arity) {
            signature.insert(render_atom(name, &args));
        }
    }

    let mut formulas: BTreeSet<Formula> = BTreeSet::new();
    for (rule, vars) in program.rules.iter().zip(&classified) {
        'assignment: for binding in bindings(&vars.globals, &pool) {
            // Instances reaching beyond the universe are dropped.
            if let Some(h) = &rule.head {
                if h.max_instantiated_depth(&binding) > universe.depth_bound {
                    continue;
                }
            }
            let mut body = BTreeSet::new();
            for elem in &rule.body {
                match elem {
                    BodyElem::Pos(a) | BodyElem::Neg(a) => {
                        if a.max_instantiated_depth(&binding) > universe.depth_bound {
                            continue 'assignment;
                        }
                        let atom = Formula::atom(a.instantiate(&binding));
                        body.insert(match elem {
                            BodyElem::Pos(_) => atom,
                            _ => Formula::neg(atom),
                        });
                    }
                    BodyElem::Neq(x, y) => {
                        if binding[x] == binding[y] {
                            continue 'assignment;
                        }
                    }
                    BodyElem::Agg(agg) => {
                        let domain = aggregate_domain(agg, &binding, universe);
                        body.insert(translate_aggregate(agg.lower, agg.upper, &domain)?);
                    }
                }
            }
            let head = match &rule.head {
                Some(h) => Formula::atom(h.instantiate(&binding)),
                None => Formula::bot(),
            };
            let formula = match body.len() {
                0 => head,
                1 => Formula::imp(body.into_iter().next().unwrap(), head),
                _ => Formula::imp(Formula::Conj(body), head),
            };
            formulas.insert(formula);
        }
    }
    Ok(Theory::new(signature, formulas).expect("grounding stays within the signature"))
}

fn bindings(
    globals: &[String],
    pool: &[GroundTerm],
) -> Vec<BTreeMap<String, GroundTerm>> {
    let mut out: Vec<BTreeMap<String, GroundTerm>> = alloc::vec![BTreeMap::new()];
    for v in globals {
        let mut next = Vec::with_capacity(out.len() * pool.len());
        for partial in &out {
            for term in pool {
                let mut b = partial.clone();
                b.insert(v.clone(), term.clone());
                next.push(b);
            }
        }
        out = next;
    }
    out
}

// The ground atoms an aggregate ranges over, under a fixed global binding:
// local variables enumerate the universe, guards filter assignments, and
// instances deeper than the bound are dropped.
fn aggregate_domain(
    agg: &CardinalityAggregate,
    global_binding: &BTreeMap<String, GroundTerm>,
    universe: &GroundUniverse,
) -> BTreeSet<Atom> {
    let locals: Vec<String> = agg
        .schema
        .vars()
        .into_iter()
        .filter(|v| !global_binding.contains_key(v))
        .collect();
    let pool: Vec<GroundTerm> = universe.terms.iter().cloned().collect();
    let mut out = BTreeSet::new();
    'local: for local_binding in bindings(&locals, &pool) {
        let mut binding = global_binding.clone();
        binding.extend(local_binding);
        for (x, y) in &agg.guards {
            if binding[x] == binding[y] {
                continue 'local;
            }
        }
        if agg.schema.max_instantiated_depth(&binding) > universe.depth_bound {
            continue;
        }
        out.insert(agg.schema.instantiate(&binding));
    }
    out
}

/// Ground and enumerate stable models.
pub fn solve(
    program: &Program,
    depth_bound: usize,
    max_atoms: usize,
) -> Result<StableModelReport, SolveError> {
    let universe = herbrand_universe(program, depth_bound)?;
    let theory = ground(program, &universe)?;
    Ok(stable_models(&theory, max_atoms)?)
}

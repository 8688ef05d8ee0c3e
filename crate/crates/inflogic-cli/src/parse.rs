//! Recursive-descent parsers for the textual formats: formulas (with
//! family comprehensions), theories, programs, sequents, and proof
//! scripts.  Each parser round-trips with the corresponding printer.

use std::collections::BTreeSet;

use inflogic::ground::{
    AtomSchema, BodyElem, CardinalityAggregate, Program, ProgramRule, Term,
};
use inflogic::{Atom, Formula, Proof, Rule, Schema, Sequent, Signature, Step, Theory};

use crate::lex::{tokenize, tokenize_at, ParseError, Spanned, Token};

/// Parser configuration: the binding for the size parameter `n` in family
/// comprehensions like `and{ p(I) : I in 1..n }`.
#[derive(Clone, Copy, Debug, Default)]
pub struct ParserConfig {
    pub size: Option<u64>,
}

struct TokenStream<'a> {
    tokens: &'a [Spanned],
    pos: usize,
    end_line: usize,
    end_col: usize,
}

impl<'a> TokenStream<'a> {
    fn new(tokens: &'a [Spanned]) -> Self {
        let (end_line, end_col) = tokens
            .last()
            .map(|s| (s.line, s.col + 1))
            .unwrap_or((1, 1));
        TokenStream {
            tokens,
            pos: 0,
            end_line,
            end_col,
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    fn peek_second(&self) -> Option<&Token> {
        self.tokens.get(self.pos + 1).map(|s| &s.token)
    }

    fn next(&mut self) -> Option<&Spanned> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos)
            .map(|s| (s.line, s.col))
            .unwrap_or((self.end_line, self.end_col))
    }

    fn error(&self, message: impl Into<String>) -> ParseError {
        let (line, col) = self.here();
        ParseError::new(line, col, message)
    }

    fn expected(&self, what: &str) -> ParseError {
        match self.peek() {
            Some(tok) => self.error(format!("expected {what}, found {tok}")),
            None => self.error(format!("expected {what}, found end of input")),
        }
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: Token, what: &str) -> Result<(), ParseError> {
        if self.eat(&token) {
            Ok(())
        } else {
            Err(self.expected(what))
        }
    }

    fn expect_end(&self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.expected("end of input"))
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        if matches!(self.peek(), Some(Token::Ident(s)) if s == word) {
            self.pos += 1;
            true
        } else {
            false
        }
    }
}

// ---------------------------------------------------------------------
// formulas

pub fn parse_formula(text: &str, config: &ParserConfig) -> Result<Formula, ParseError> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let f = formula(&mut ts, config)?;
    ts.expect_end()?;
    Ok(f)
}

fn formula(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Formula, ParseError> {
    let lhs = implication(ts, cfg)?;
    if ts.eat(&Token::Iff) {
        let rhs = formula(ts, cfg)?;
        Ok(Formula::iff(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn implication(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Formula, ParseError> {
    let lhs = unary(ts, cfg)?;
    if ts.eat(&Token::Arrow) {
        let rhs = implication(ts, cfg)?;
        Ok(Formula::imp(lhs, rhs))
    } else {
        Ok(lhs)
    }
}

fn unary(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Formula, ParseError> {
    if ts.eat_keyword("not") {
        Ok(Formula::neg(unary(ts, cfg)?))
    } else {
        primary(ts, cfg)
    }
}

fn primary(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Formula, ParseError> {
    match ts.peek() {
        Some(Token::Ident(word)) => match word.as_str() {
            "bot" => {
                ts.next();
                Ok(Formula::bot())
            }
            "top" => {
                ts.next();
                Ok(Formula::top())
            }
            "and" => {
                ts.next();
                ts.expect(Token::LBrace, "{")?;
                Ok(Formula::conj(family(ts, cfg)?))
            }
            "or" => {
                ts.next();
                ts.expect(Token::LBrace, "{")?;
                Ok(Formula::disj(family(ts, cfg)?))
            }
            _ => Ok(Formula::atom(ground_atom(ts)?)),
        },
        Some(Token::LParen) => {
            ts.next();
            let f = formula(ts, cfg)?;
            ts.expect(Token::RParen, ")")?;
            Ok(f)
        }
        Some(Token::Var(v)) => Err(ts.error(format!(
            "unexpected variable {v}; index variables are bound only inside a family comprehension"
        ))),
        _ => Err(ts.expected("a formula")),
    }
}

// A brace-enclosed formula list `f1; f2; ...` or a comprehension
// `template : I in lo..hi`, entered with the opening brace consumed and
// returning with the closing brace consumed.
fn family(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Vec<Formula>, ParseError> {
    if ts.eat(&Token::RBrace) {
        return Ok(Vec::new());
    }
    if let Some(colon_at) = comprehension_colon(ts)? {
        let template = ts.tokens[ts.pos..colon_at].to_vec();
        ts.pos = colon_at + 1;
        let Some(Spanned {
            token: Token::Var(index_var),
            ..
        }) = ts.next().cloned()
        else {
            return Err(ts.expected("an index variable"));
        };
        if !ts.eat_keyword("in") {
            return Err(ts.expected("in"));
        }
        let lo = bound(ts, cfg)?;
        ts.expect(Token::DotDot, "..")?;
        let hi = bound(ts, cfg)?;
        ts.expect(Token::RBrace, "}")?;
        let mut out = Vec::new();
        for value in lo..=hi {
            let substituted: Vec<Spanned> = template
                .iter()
                .map(|s| match &s.token {
                    Token::Var(v) if *v == index_var => Spanned {
                        token: Token::Nat(value),
                        line: s.line,
                        col: s.col,
                    },
                    _ => s.clone(),
                })
                .collect();
            let mut sub = TokenStream::new(&substituted);
            let f = formula(&mut sub, cfg)?;
            sub.expect_end()?;
            out.push(f);
        }
        Ok(out)
    } else {
        let mut out = vec![formula(ts, cfg)?];
        while ts.eat(&Token::Semi) {
            out.push(formula(ts, cfg)?);
        }
        ts.expect(Token::RBrace, "} or ;")?;
        Ok(out)
    }
}

// Absolute token index of a comprehension colon at the current brace
// level, if the family is a comprehension.
fn comprehension_colon(ts: &TokenStream) -> Result<Option<usize>, ParseError> {
    let mut depth = 0usize;
    for (off, s) in ts.tokens[ts.pos..].iter().enumerate() {
        match &s.token {
            Token::LBrace => depth += 1,
            Token::RBrace => {
                if depth == 0 {
                    return Ok(None);
                }
                depth -= 1;
            }
            Token::Colon if depth == 0 => return Ok(Some(ts.pos + off)),
            _ => {}
        }
    }
    Err(ts.error("unclosed family brace"))
}

fn bound(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<u64, ParseError> {
    match ts.peek() {
        Some(Token::Nat(value)) => {
            let value = *value;
            ts.next();
            Ok(value)
        }
        Some(Token::Ident(word)) if word == "n" => {
            let size = cfg
                .size
                .ok_or_else(|| ts.error("family bound n requires --size"))?;
            ts.next();
            Ok(size)
        }
        _ => Err(ts.expected("a number or n")),
    }
}

// A ground atom rendered back into its canonical name: identifier plus an
// optional parenthesized list of ground terms.
fn ground_atom(ts: &mut TokenStream) -> Result<Atom, ParseError> {
    let (line, col) = ts.here();
    let Some(Spanned {
        token: Token::Ident(name),
        ..
    }) = ts.next().cloned()
    else {
        return Err(ParseError::new(line, col, "expected an atom"));
    };
    let mut rendered = name;
    if ts.eat(&Token::LParen) {
        rendered.push('(');
        loop {
            ground_term_text(ts, &mut rendered)?;
            if ts.eat(&Token::Comma) {
                rendered.push(',');
            } else {
                break;
            }
        }
        ts.expect(Token::RParen, ")")?;
        rendered.push(')');
    }
    Atom::new(rendered).map_err(|e| ParseError::new(line, col, e.to_string()))
}

fn ground_term_text(ts: &mut TokenStream, into: &mut String) -> Result<(), ParseError> {
    match ts.peek().cloned() {
        Some(Token::Nat(value)) => {
            ts.next();
            into.push_str(&value.to_string());
            Ok(())
        }
        Some(Token::Ident(name)) => {
            ts.next();
            into.push_str(&name);
            if ts.eat(&Token::LParen) {
                into.push('(');
                loop {
                    ground_term_text(ts, into)?;
                    if ts.eat(&Token::Comma) {
                        into.push(',');
                    } else {
                        break;
                    }
                }
                ts.expect(Token::RParen, ")")?;
                into.push(')');
            }
            Ok(())
        }
        _ => Err(ts.expected("a ground term")),
    }
}

// ---------------------------------------------------------------------
// interpretations and theories

/// A comma- or whitespace-separated list of atoms (empty input allowed).
pub fn parse_atom_list(text: &str) -> Result<Vec<Atom>, ParseError> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let mut out = Vec::new();
    while !ts.at_end() {
        out.push(ground_atom(&mut ts)?);
        ts.eat(&Token::Comma);
    }
    Ok(out)
}

/// Theory files: one formula per line, plus optional `atoms: ...` lines
/// declaring signature atoms beyond those occurring in formulas.
pub fn parse_theory(text: &str, config: &ParserConfig) -> Result<Theory, ParseError> {
    let mut signature = Signature::default();
    let mut formulas = Vec::new();
    for (offset, raw) in text.lines().enumerate() {
        let tokens = tokenize_at(raw, offset + 1)?;
        if tokens.is_empty() {
            continue;
        }
        let mut ts = TokenStream::new(&tokens);
        if matches!(ts.peek(), Some(Token::Ident(w)) if w == "atoms")
            && ts.peek_second() == Some(&Token::Colon)
        {
            ts.next();
            ts.next();
            while !ts.at_end() {
                signature.insert(ground_atom(&mut ts)?);
                ts.eat(&Token::Comma);
            }
            continue;
        }
        let f = formula(&mut ts, config)?;
        ts.expect_end()?;
        signature.extend(f.atoms());
        formulas.push(f);
    }
    Theory::new(signature, formulas).map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical theory file text: the full signature on an `atoms:` line,
/// then one formula per line in structural order.
pub fn print_theory(theory: &Theory) -> String {
    let mut out = String::from("atoms:");
    for a in theory.signature().iter() {
        out.push(' ');
        out.push_str(a.as_str());
    }
    out.push('\n');
    for f in theory.formulas() {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

// ---------------------------------------------------------------------
// programs

pub fn parse_program(text: &str) -> Result<Program, ParseError> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let mut rules = Vec::new();
    while !ts.at_end() {
        rules.push(rule(&mut ts)?);
    }
    Ok(Program { rules })
}

fn rule(ts: &mut TokenStream) -> Result<ProgramRule, ParseError> {
    let head = if ts.eat(&Token::HashFalse) {
        None
    } else {
        Some(atom_schema(ts)?)
    };
    let mut body = Vec::new();
    if ts.eat(&Token::ColonDash) {
        loop {
            body.push(body_element(ts)?);
            if !ts.eat(&Token::Comma) {
                break;
            }
        }
    }
    ts.expect(Token::Dot, ".")?;
    Ok(ProgramRule { head, body })
}

fn atom_schema(ts: &mut TokenStream) -> Result<AtomSchema, ParseError> {
    let Some(Spanned {
        token: Token::Ident(predicate),
        ..
    }) = ts.next().cloned()
    else {
        return Err(ts.expected("a predicate"));
    };
    let mut args = Vec::new();
    if ts.eat(&Token::LParen) {
        loop {
            args.push(pattern_term(ts)?);
            if !ts.eat(&Token::Comma) {
                break;
            }
        }
        ts.expect(Token::RParen, ")")?;
    }
    Ok(AtomSchema { predicate, args })
}

fn pattern_term(ts: &mut TokenStream) -> Result<Term, ParseError> {
    match ts.peek().cloned() {
        Some(Token::Var(v)) => {
            ts.next();
            Ok(Term::Var(v))
        }
        Some(Token::Nat(value)) => {
            ts.next();
            Ok(Term::constant(value.to_string()))
        }
        Some(Token::Ident(name)) => {
            ts.next();
            let mut args = Vec::new();
            if ts.eat(&Token::LParen) {
                loop {
                    args.push(pattern_term(ts)?);
                    if !ts.eat(&Token::Comma) {
                        break;
                    }
                }
                ts.expect(Token::RParen, ")")?;
            }
            Ok(Term::Fun(name, args))
        }
        _ => Err(ts.expected("a term")),
    }
}

fn body_element(ts: &mut TokenStream) -> Result<BodyElem, ParseError> {
    match ts.peek().cloned() {
        Some(Token::Var(x)) => {
            ts.next();
            ts.expect(Token::Neq, "!=")?;
            let Some(Spanned {
                token: Token::Var(y),
                ..
            }) = ts.next().cloned()
            else {
                return Err(ts.expected("a variable"));
            };
            Ok(BodyElem::Neq(x, y))
        }
        Some(Token::Nat(_)) | Some(Token::LBrace) => Ok(BodyElem::Agg(aggregate(ts)?)),
        Some(Token::Ident(w)) if w == "not" => {
            ts.next();
            Ok(BodyElem::Neg(atom_schema(ts)?))
        }
        Some(Token::Ident(_)) => Ok(BodyElem::Pos(atom_schema(ts)?)),
        _ => Err(ts.expected("a body element")),
    }
}

fn aggregate(ts: &mut TokenStream) -> Result<CardinalityAggregate, ParseError> {
    let lower = match ts.peek() {
        Some(Token::Nat(value)) => {
            let value = *value;
            ts.next();
            Some(value)
        }
        _ => None,
    };
    let (line, col) = ts.here();
    ts.expect(Token::LBrace, "{")?;
    let schema = atom_schema(ts)?;
    let mut guards = Vec::new();
    while ts.eat(&Token::Comma) {
        let Some(Spanned {
            token: Token::Var(x),
            ..
        }) = ts.next().cloned()
        else {
            return Err(ts.expected("a guard variable"));
        };
        ts.expect(Token::Neq, "!=")?;
        let Some(Spanned {
            token: Token::Var(y),
            ..
        }) = ts.next().cloned()
        else {
            return Err(ts.expected("a guard variable"));
        };
        guards.push((x, y));
    }
    ts.expect(Token::RBrace, "}")?;
    let upper = match ts.peek() {
        Some(Token::Nat(value)) => {
            let value = *value;
            ts.next();
            Some(value)
        }
        _ => None,
    };
    if lower.is_none() && upper.is_none() {
        return Err(ParseError::new(line, col, "aggregate needs at least one bound"));
    }
    if let (Some(l), Some(u)) = (lower, upper) {
        if l > u {
            return Err(ParseError::new(
                line,
                col,
                format!("aggregate bounds are inverted: {l} > {u}"),
            ));
        }
    }
    Ok(CardinalityAggregate {
        lower,
        upper,
        schema,
        guards,
    })
}

/// A standalone aggregate expression, as taken on the command line.
pub fn parse_aggregate(text: &str) -> Result<CardinalityAggregate, ParseError> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let agg = aggregate(&mut ts)?;
    ts.expect_end()?;
    Ok(agg)
}

// ---------------------------------------------------------------------
// sequents and proof scripts

pub fn parse_sequent(text: &str, config: &ParserConfig) -> Result<Sequent, ParseError> {
    let tokens = tokenize(text)?;
    let mut ts = TokenStream::new(&tokens);
    let s = sequent(&mut ts, config)?;
    ts.expect_end()?;
    Ok(s)
}

fn sequent(ts: &mut TokenStream, cfg: &ParserConfig) -> Result<Sequent, ParseError> {
    let mut assumptions = Vec::new();
    if !ts.eat(&Token::Turnstile) {
        loop {
            assumptions.push(formula(ts, cfg)?);
            if ts.eat(&Token::Comma) {
                continue;
            }
            ts.expect(Token::Turnstile, "|- or ,")?;
            break;
        }
    }
    let conclusion = formula(ts, cfg)?;
    Ok(Sequent::new(assumptions, conclusion))
}

/// Proof scripts: one `step` record per line,
/// `step N <sequent> by <rule> [from i,j,...] [with <params>]`.
/// Step numbers are 1-based and must be consecutive.
pub fn parse_proof(text: &str, config: &ParserConfig) -> Result<Proof, ParseError> {
    let mut steps = Vec::new();
    for (offset, raw) in text.lines().enumerate() {
        let tokens = tokenize_at(raw, offset + 1)?;
        if tokens.is_empty() {
            continue;
        }
        let mut ts = TokenStream::new(&tokens);
        steps.push(proof_step(&mut ts, config, steps.len())?);
        ts.expect_end()?;
    }
    Ok(Proof::new(steps))
}

fn proof_step(
    ts: &mut TokenStream,
    cfg: &ParserConfig,
    index: usize,
) -> Result<Step, ParseError> {
    if !ts.eat_keyword("step") {
        return Err(ts.expected("step"));
    }
    match ts.next() {
        Some(Spanned {
            token: Token::Nat(n),
            line,
            col,
        }) if *n as usize != index + 1 => {
            return Err(ParseError::new(
                *line,
                *col,
                format!("expected step {}, found {n}", index + 1),
            ));
        }
        Some(Spanned {
            token: Token::Nat(_),
            ..
        }) => {}
        _ => return Err(ts.expected("a step number")),
    }

    // the sequent runs until the top-level `by`
    let start = ts.pos;
    let mut depth = 0usize;
    let by_at = loop {
        match ts.tokens.get(ts.pos) {
            None => return Err(ts.error("missing by <rule>")),
            Some(s) => match &s.token {
                Token::LBrace | Token::LParen => {
                    depth += 1;
                    ts.pos += 1;
                }
                Token::RBrace | Token::RParen => {
                    depth = depth.saturating_sub(1);
                    ts.pos += 1;
                }
                Token::Ident(w) if w == "by" && depth == 0 => break ts.pos,
                _ => ts.pos += 1,
            },
        }
    };
    let sequent_tokens = &ts.tokens[start..by_at];
    let mut seq_ts = TokenStream::new(sequent_tokens);
    let seq = sequent(&mut seq_ts, cfg)?;
    seq_ts.expect_end()?;
    ts.pos = by_at + 1;

    let Some(Spanned {
        token: Token::Ident(rule_name),
        line,
        col,
    }) = ts.next().cloned()
    else {
        return Err(ts.expected("a rule name"));
    };

    let mut premises = Vec::new();
    if ts.eat_keyword("from") {
        loop {
            match ts.next() {
                Some(Spanned {
                    token: Token::Nat(n),
                    line,
                    col,
                }) => {
                    if *n == 0 {
                        return Err(ParseError::new(*line, *col, "step numbers are 1-based"));
                    }
                    premises.push((*n - 1) as usize);
                }
                _ => return Err(ts.expected("a premise index")),
            }
            if !ts.eat(&Token::Comma) {
                break;
            }
        }
    }

    let rule = rule_of(ts, cfg, &rule_name)
        .map_err(|m| ParseError::new(line, col, m))??;
    Ok(Step {
        sequent: seq,
        rule,
        premises,
    })
}

// Outer error: unknown rule name.  Inner: parameter parse failure.
#[allow(clippy::type_complexity)]
fn rule_of(
    ts: &mut TokenStream,
    cfg: &ParserConfig,
    name: &str,
) -> Result<Result<Rule, ParseError>, String> {
    let plain = |r: Rule| Ok(Ok(r));
    match name {
        "axiom" => plain(Rule::Axiom),
        "conj_intro" => plain(Rule::ConjIntro),
        "conj_elim" => plain(Rule::ConjElim),
        "disj_intro" => plain(Rule::DisjIntro),
        "disj_elim" | "c" | "contradiction" => plain(Rule::DisjElim),
        "impl_intro" => plain(Rule::ImplIntro),
        "impl_elim" => plain(Rule::ImplElim),
        "weaken" => plain(Rule::Weaken),
        "lem" | "ht" | "ilem" | "demorgan_conv" | "dist_conj_over_disj"
        | "dist_disj_over_conj" => Ok(schema_params(ts, cfg, name)),
        other => Err(format!("unknown rule {other}")),
    }
}

fn schema_params(
    ts: &mut TokenStream,
    cfg: &ParserConfig,
    name: &str,
) -> Result<Rule, ParseError> {
    if !ts.eat_keyword("with") {
        return Err(ts.expected("with <schema parameters>"));
    }
    let schema = match name {
        "lem" => Schema::Lem(formula(ts, cfg)?),
        "ht" => {
            let f = formula(ts, cfg)?;
            ts.expect(Token::Comma, ",")?;
            let g = formula(ts, cfg)?;
            Schema::Ht(f, g)
        }
        "ilem" => {
            ts.expect(Token::LBrace, "{")?;
            Schema::Ilem(family(ts, cfg)?)
        }
        "demorgan_conv" => {
            ts.expect(Token::LBrace, "{")?;
            Schema::DeMorganConv(family(ts, cfg)?.into_iter().collect())
        }
        "dist_conj_over_disj" | "dist_disj_over_conj" => {
            let mut families: Vec<BTreeSet<Formula>> = Vec::new();
            loop {
                ts.expect(Token::LBrace, "{")?;
                families.push(family(ts, cfg)?.into_iter().collect());
                if !ts.eat(&Token::Comma) {
                    break;
                }
            }
            if name == "dist_conj_over_disj" {
                Schema::DistConjOverDisj(families)
            } else {
                Schema::DistDisjOverConj(families)
            }
        }
        _ => unreachable!(),
    };
    Ok(Rule::Schema(schema))
}

use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use monideal::text::{parse_input, parse_monomial_list, Format, Parsed};
use monideal::{Error, Hypergraph, Monomial, MonomialIdeal, VarNames};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Auto,
    EdgeList,
    IdealExpr,
}

/// A parsed positional input and the names its variables go by.
pub struct Input {
    pub names: VarNames,
    pub parsed: Parsed,
}

impl Input {
    /// `-` reads standard input, an existing path is read as a file, and
    /// anything else is taken as the input text itself.
    pub fn load(source: &str, format: FormatArg, vars: Option<&str>) -> Result<Input, Error> {
        let text = if source == "-" {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::Usage(format!("reading standard input: {e}")))?;
            s
        } else if Path::new(source).is_file() {
            std::fs::read_to_string(source).map_err(|e| Error::Usage(format!("reading {source}: {e}")))?
        } else {
            source.to_owned()
        };
        let names = vars.map(VarNames::parse_list).transpose()?;
        let format = match format {
            FormatArg::Auto => None,
            FormatArg::EdgeList => Some(Format::EdgeList),
            FormatArg::IdealExpr => Some(Format::IdealExpr),
        };
        let (names, parsed) = parse_input(&text, format, names.as_ref())?;
        Ok(Input { names, parsed })
    }

    pub fn ideal(&self) -> MonomialIdeal {
        self.parsed.clone().into_ideal()
    }

    pub fn hypergraph(&self) -> Result<Hypergraph, Error> {
        self.parsed.clone().into_hypergraph()
    }

    /// The ideal, required to be square-free.
    pub fn square_free(&self) -> Result<MonomialIdeal, Error> {
        let i = self.ideal();
        if !i.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        Ok(i)
    }

    /// Variable list such as `x1,x3` resolved against this input's names.
    pub fn var_set(&self, list: &str) -> Result<monideal::VarSet, Error> {
        let mut set = monideal::VarSet::EMPTY;
        for tok in list.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let v = self
                .names
                .index_of(tok)
                .ok_or_else(|| Error::Usage(format!("unknown variable {tok:?}")))?;
            set.insert(v);
        }
        Ok(set)
    }

    /// A single monomial such as `x1*x2^2` in this input's ring.
    pub fn monomial(&self, src: &str) -> Result<Monomial, Error> {
        let mut ms = parse_monomial_list(src, &self.names)?;
        if ms.len() != 1 {
            return Err(Error::Usage(format!("expected one monomial, got {}", ms.len())));
        }
        Ok(ms.remove(0))
    }
}

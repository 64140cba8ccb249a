"""Kernel for a lambda calculus with definitions, casts, and bounded
rt-reduction."""

from .arity import ATOM, Arity, Atom, Fun, format_arity, infer_arity
from .checker import (
    ValidityReport,
    check_valid,
    infer_type,
    iterated_typecheck,
    rt_convertible,
    typecheck,
)
from .domains import (
    EMPTY,
    OMEGA,
    ApplicabilityDomain,
    Empty,
    FinSet,
    Omega,
    PRESETS,
    domain_leq,
    exists_geq,
    fin_set,
    format_domain,
    least_geq,
    member,
    parse_domain,
)
from .equiv import (
    closure_sort_irrelevant,
    env_eq_on,
    referred_env_eq,
    same_top_constructor,
    sort_irrelevant,
    whnf_equivalent,
)
from .errors import (
    FuelExhausted,
    Invalid,
    KernelError,
    NoArity,
    NoTypeStep,
    OpenHead,
    StuckApplication,
)
from .eta import eta_expand_closure, eta_expand_env, eta_expand_term
from .normalize import (
    WhnfResult,
    default_fuel,
    is_r_normal,
    r_normalize,
    rt_normal_form,
    whnf_rt,
)
from .steps import (
    QrstStep,
    RtStep,
    canonical_type,
    qrst_steps,
    reachable_rt,
    step_env_r,
    step_env_x,
    step_rt,
    step_t,
    step_x,
)
from .surface import (
    ParseError,
    UnboundName,
    parse_closure,
    parse_term,
    print_closure,
    print_env,
    print_term,
)
from .terms import (
    Abbr,
    Abst,
    Appl,
    Cast,
    Closure,
    Decl,
    Defn,
    Entry,
    Env,
    Ref,
    Sort,
    SortPolicy,
    SUCCESSOR,
    Term,
    VOID,
    Void,
    closure_size,
    direct_subclosures,
    free_in,
    inherited_free_vars,
    is_closed_in,
    is_neutral,
    lift,
    lower,
    monus,
    resolve,
    size,
    subst,
    table_policy,
)

__version__ = "0.1.0"

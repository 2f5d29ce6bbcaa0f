from __future__ import annotations

from jinja2 import Environment, select_autoescape

from src.reports import (
    CanonicalOut,
    EnumerationOut,
    GenericOut,
    IntersectOut,
    MilnorOut,
    SampleOut,
    SemigroupOut,
    TraceOut,
    ValidationOut,
)

ENV = Environment(autoescape=select_autoescape(["html", "xml"]))
TEXT_ENV = Environment(autoescape=False, trim_blocks=True, lstrip_blocks=True)


def _gens(values) -> str:
    return "<" + ",".join(str(v) for v in values) + ">"


def _tuple(values) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


def _inequality(coeffs, rhs) -> str:
    lhs = "+".join(f"{c}*t{j}" for j, c in enumerate(coeffs))
    return f"{lhs} > {rhs}"


for _env in (ENV, TEXT_ENV):
    _env.filters["gens"] = _gens
    _env.filters["tup"] = _tuple
    _env.filters["ineq"] = _inequality


VALIDATE_TEXT = TEXT_ENV.from_string("""\
{% if report.valid %}
{{ report.generators | gens }} is valid
{% set s = report.semigroup %}
conductor: {{ s.conductor }}
d: {{ s.d | tup }}  e: {{ s.e | tup }}  m: {{ s.m | tup }}
{% else %}
{{ report.generators | gens }} is not valid
{% for f in report.failures %}
  {{ f.text }}: {{ f.label }}
{% endfor %}
{% endif %}""")

SEMIGROUP_TEXT = TEXT_ENV.from_string("""\
{{ s.generators | gens }}
conductor: {{ s.conductor }}
{% if verbose %}
d: {{ s.d | tup }}  e: {{ s.e | tup }}  m: {{ s.m | tup }}
{% endif %}""")

CANONICAL_TEXT = TEXT_ENV.from_string("""\
{{ out.equation if expanded else out.nested }}
{% if verbose %}
{% for g in out.levels %}
G_{{ loop.index }} = {{ g }}
{% endfor %}
{% for t in out.thetas %}
theta_{{ loop.index + 1 }} = {{ t | tup }}
{% endfor %}
{% endif %}""")

GENERIC_TEXT = TEXT_ENV.from_string("""\
{{ out.text }}
{% for level in out.levels %}
level {{ loop.index }} (e={{ level.e }}): forced theta {{ level.forced.theta | tup }}
{% for c in level.constraints %}
  i={{ c.i }}: {{ c.coeffs | ineq(c.rhs) }}
{% endfor %}
{% if level.members %}
  theta_0 <= {{ out.xdeg_bound }}: {{ level.members | map('tup') | join(' ') }}
{% endif %}
{% endfor %}""")

SAMPLE_TEXT = TEXT_ENV.from_string("{{ out.member }}")

TRACE_TEXT = TEXT_ENV.from_string("""\
{% if out.verdict == 'irreducible' %}
irreducible r={{ out.r | tup }} d={{ out.d | tup }}
{% else %}
reducible: {{ out.reason }}
{% endif %}
{% if verbose %}
{% if out.shifted %}
(Tschirnhausen shift applied)
{% endif %}
{% for g in out.roots %}
g_{{ loop.index }} = {{ g }}
{% endfor %}
{% for st in out.stages %}
k={{ st.k }} e={{ st.e }} target={{ st.target }} fint={{ st.fint_top }} {{ st.fint_checks }}
{% endfor %}
{% endif %}""")

MILNOR_TEXT = TEXT_ENV.from_string("{{ out.milnor }}")

INTERSECT_TEXT = TEXT_ENV.from_string("""\
{{ out.multiplicity }}
{% if verbose %}
Res_y = {{ out.resultant }}
{% endif %}""")

PUISEUX_TEXT = TEXT_ENV.from_string("""\
{% for pair in s.puiseux_pairs %}{{ pair | tup }}{{ ' ' if not loop.last }}{% endfor %}""")

ENUMERATE_TEXT = TEXT_ENV.from_string("""\
Milnor number {{ out.milnor }}: {{ out.classes | length }} class{{ 'es' if out.classes | length != 1 }}
{% for c in out.classes %}
{{ c.generators | gens }}  pairs {{ c.puiseux_pairs | map('tup') | join(' ') }}{% if c.canonical %}  {{ c.canonical }}{% endif %}

{% endfor %}""")

ENUMERATE_HTML = ENV.from_string("""
<!doctype html>
<html lang="en">
<head>
  <meta charset="utf-8"/>
  <meta name="viewport" content="width=device-width, initial-scale=1"/>
  <title>Branches with Milnor number {{ out.milnor }}</title>
  <style>
    :root{ --bg:#07080a; --surface:#11151b; --line:#212730; --text:#edf2f7; --muted:#8a99a8; --cyan:#67e8f9; }
    *{box-sizing:border-box}
    body{margin:0;padding:32px;background:var(--bg);color:var(--text);font-family:system-ui,sans-serif}
    h1{font-weight:700;margin:0 0 6px}
    .meta{color:var(--muted);margin-bottom:24px}
    table{border-collapse:collapse;width:100%;background:var(--surface)}
    th,td{border-bottom:1px solid var(--line);padding:10px 12px;text-align:left}
    th{color:var(--muted);font-weight:500}
    code{color:var(--cyan)}
  </style>
</head>
<body>
  <h1>Milnor number {{ out.milnor }}</h1>
  <div class="meta">{{ out.classes | length }} equisingularity classes{% if generated_at %} &middot; generated {{ generated_at }}{% endif %}</div>
  <table>
    <thead><tr><th>#</th><th>Semigroup</th><th>h</th><th>Puiseux pairs</th><th>Canonical equation</th></tr></thead>
    <tbody>
    {% for c in out.classes %}
      <tr>
        <td>{{ loop.index }}</td>
        <td><code>{{ c.generators | gens }}</code></td>
        <td>{{ c.generators | length - 1 }}</td>
        <td>{{ c.puiseux_pairs | map('tup') | join(' ') }}</td>
        <td><code>{{ c.canonical or '' }}</code></td>
      </tr>
    {% endfor %}
    </tbody>
  </table>
</body>
</html>
""")


def render_validation(report: ValidationOut) -> str:
    return VALIDATE_TEXT.render(report=report).rstrip()


def render_semigroup(s: SemigroupOut, verbose: bool = False) -> str:
    return SEMIGROUP_TEXT.render(s=s, verbose=verbose).rstrip()


def render_canonical(out: CanonicalOut, expanded: bool = False, verbose: bool = False) -> str:
    return CANONICAL_TEXT.render(out=out, expanded=expanded, verbose=verbose).rstrip()


def render_generic(out: GenericOut) -> str:
    return GENERIC_TEXT.render(out=out).rstrip()


def render_sample(out: SampleOut) -> str:
    return SAMPLE_TEXT.render(out=out)


def render_trace(out: TraceOut, verbose: bool = False) -> str:
    return TRACE_TEXT.render(out=out, verbose=verbose).rstrip()


def render_milnor(out: MilnorOut) -> str:
    return MILNOR_TEXT.render(out=out)


def render_intersect(out: IntersectOut, verbose: bool = False) -> str:
    return INTERSECT_TEXT.render(out=out, verbose=verbose).rstrip()


def render_puiseux(s: SemigroupOut) -> str:
    return PUISEUX_TEXT.render(s=s)


def render_enumeration(out: EnumerationOut) -> str:
    return ENUMERATE_TEXT.render(out=out).rstrip()


def render_enumeration_html(out: EnumerationOut, generated_at: str | None = None) -> str:
    return ENUMERATE_HTML.render(out=out, generated_at=generated_at)

charpoly_report_string = """\
chi_{ {{- report.u }},{{ report.n -}} } of [{{ report.curve }}], {{ report.method }}, degree {{ report.degree }}
{{ chi }}
{% for ell, value in report.valuation_min.items() -%}
valuation at {{ ell }}: {% if value is none %}not applicable{% else %}{{ value }} ({{ "ok" if report.valuation_bound_ok[ell] else "VIOLATED" }}){% endif %}
{% endfor -%}
{% if report.numeric_residual is not none -%}
numeric residual: {{ "%.3e"|format(report.numeric_residual) }}
{% endif -%}
{% if report.timings -%}
{% for name, seconds in report.timings.items() %}{{ name }}: {{ "%.3f"|format(seconds) }}s
{% endfor -%}
{% endif -%}
"""

polynomial_string = """\
{{ name }} = {{ poly }}
"""

classification_string = """\
[{{ report.curve }}]: {{ report.label.value }} ({{ report.qualifier }})
  psi_3 factors as {{ report.evidence.factorization_type|join("+") }}
{%- if report.evidence.quartic_group %}, Galois group {{ report.evidence.quartic_group }}{% endif %}
{% if report.evidence.probe -%}
  -id probe at ell={{ report.evidence.probe.ell }}: {% if report.evidence.probe.found is not none %}Found({{ report.evidence.probe.found }}){% else %}NotFoundUpTo({{ report.evidence.probe.bound }}){% endif %}
{% endif -%}
"""

probe_string = """\
ell={{ report.ell }}: {% if report.found is not none %}Found({{ report.found }}){% else %}NotFoundUpTo({{ report.bound }}){% endif %}
"""

corpus_report_string = """\
{% for entry in report.entries -%}
{{ "%-8s"|format(entry.status.value) }} {{ entry.name }}{% if entry.detail %}: {{ entry.detail }}{% endif %}
{%- if entry.timings %} [{{ "%.2f"|format(entry.timings.get("total", 0)) }}s]{% endif %}
{% endfor -%}
{{ report.summary["pass"] }} passed, {{ report.summary["erratum"] }} errata, {{ report.summary["fail"] }} failed, \
{{ report.summary["skipped"] }} skipped
"""

scaling_string = """\
[{{ report.curve }}] n={{ report.n }}, p={{ report.p }}, m={{ report.m }}: {{ "ok" if report.ok else "FAILED" }}
{% for v in report.valuations -%}
  x^{{ loop.index0 }}: valuation {{ "inf" if v is none else v }} >= {{ report.required[loop.index0] }}
{% endfor -%}
"""

degree_string = """\
{% for group in report.groups -%}
deg {{ group.degree }}: n = {{ group.orders|join(", ") }}
{% endfor -%}
"""

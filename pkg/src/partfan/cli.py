"""Command-line surface.

Subcommands communicate through a JSON envelope on stdin/stdout holding
any of: fan, partition, poset, arrangement, base, presentation, cw.
Producing commands extend the envelope; checking commands print a result
document; euler prints a bare integer.  All output is deterministic
(sorted keys, sorted collections).  Module errors exit nonzero with
``{"error": code, "witness": ...}``.
"""

import argparse
import json
import sys

from . import arrangement as arrlib
from . import catalog
from . import category as catlib
from . import cw as cwlib
from . import groups as grplib
from . import partition as partlib
from . import poset as posetlib
from . import render
from .errors import BadInput, PartFanError
from .fan import fan_from_json, is_finite_complete, validate_fan


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if not hasattr(args, "handler"):
        parser.print_help()
        return 2
    try:
        output = args.handler(args)
    except PartFanError as err:
        print(json.dumps(err.to_json(), sort_keys=True))
        return 1
    if output is not None:
        if isinstance(output, str):
            sys.stdout.write(output)
        else:
            print(json.dumps(output, sort_keys=True))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="partfan",
                                     description="partitioned-fan toolkit")
    sub = parser.add_subparsers(dest="command")

    examples = sub.add_parser("examples", help="emit a built-in example")
    examples.add_argument("name", choices=sorted(catalog.EXAMPLES))
    examples.set_defaults(handler=cmd_examples)

    fan = sub.add_parser("fan").add_subparsers(dest="sub")
    _cmd(fan, "validate", cmd_fan_validate)
    _cmd(fan, "complete", cmd_fan_complete)
    _cmd(fan, "from-arrangement", cmd_fan_from_arrangement)

    part = sub.add_parser("partition").add_subparsers(dest="sub")
    _cmd(part, "potentials", cmd_partition_potentials)
    _cmd(part, "check", cmd_partition_check)
    closure = _cmd(part, "closure", cmd_partition_closure)
    closure.add_argument("--seed", required=True,
                         help='e.g. "s1~s3,s2~s4" or "[0]~[2]"')
    meet = _cmd(part, "meet", cmd_partition_meet)
    meet.add_argument("--other", required=True)
    joinp = _cmd(part, "join", cmd_partition_join)
    joinp.add_argument("--other", required=True)
    enum = _cmd(part, "enumerate", cmd_partition_enumerate)
    enum.add_argument("--limit", type=int, default=16)

    cat = sub.add_parser("category").add_subparsers(dest="sub")
    _cmd(cat, "build", cmd_category_build)
    _cmd(cat, "check-cubical", cmd_category_cubical)
    _cmd(cat, "check-last-factors", cmd_category_last_factors)
    export = _cmd(cat, "export", cmd_category_export)
    export.add_argument("--format", choices=("dot", "json"), default="dot")

    poset = sub.add_parser("poset").add_subparsers(dest="sub")
    functional = _cmd(poset, "functional", cmd_poset_functional)
    functional.add_argument("--b", required=True, help='functional, e.g. "1,1"')
    bisector = _cmd(poset, "bisector", cmd_poset_bisector)
    bisector.add_argument("--base", required=True, help='chamber, e.g. "[0,3]"')
    regions = _cmd(poset, "regions", cmd_poset_regions)
    regions.add_argument("--base", default="positive")
    _cmd(poset, "check", cmd_poset_check)
    _cmd(poset, "nondegenerate", cmd_poset_nondegenerate)

    group = sub.add_parser("group").add_subparsers(dest="sub")
    picture = _cmd(group, "picture", cmd_group_picture)
    picture.add_argument("--mode", choices=("full", "codim2"), default="full")
    picture.add_argument("--format", choices=("json", "text", "gap"),
                         default="json")
    alt = _cmd(group, "alt", cmd_group_alt)
    alt.add_argument("--format", choices=("json", "text", "gap"),
                     default="json")
    psi = _cmd(group, "psi", cmd_group_psi)
    psi.add_argument("--source", required=True)
    psi.add_argument("--target", required=True)
    quotient = _cmd(group, "quotient", cmd_group_quotient)
    quotient.add_argument("--coarse", required=True, help="partition JSON file")
    _cmd(group, "abelianize", cmd_group_abelianize)
    _cmd(group, "certify-rank2", cmd_group_certify_rank2)
    _cmd(group, "certify-brauer", cmd_group_certify_brauer)

    cw = sub.add_parser("cw").add_subparsers(dest="sub")
    _cmd(cw, "build", cmd_cw_build)
    _cmd(cw, "euler", cmd_cw_euler)
    _cmd(cw, "pi1", cmd_cw_pi1)
    _cmd(cw, "compare", cmd_cw_compare)

    arr = sub.add_parser("arrangement").add_subparsers(dest="sub")
    _cmd(arr, "flats", cmd_arr_flats)
    shardsp = _cmd(arr, "shards", cmd_arr_shards)
    shardsp.add_argument("--base", default="positive")
    shard_part = _cmd(arr, "shard-partition", cmd_arr_shard_partition)
    shard_part.add_argument("--base", default="positive")
    _cmd(arr, "flat-partition", cmd_arr_flat_partition)
    _cmd(arr, "wall-algebra", cmd_arr_wall_algebra)

    renderp = sub.add_parser("render")
    renderp.add_argument("--projection", default="1,1,1")
    renderp.set_defaults(handler=cmd_render)
    return parser


def _cmd(sub, name, handler):
    p = sub.add_parser(name)
    p.set_defaults(handler=handler)
    return p


# ---------------------------------------------------------------------------
# envelope helpers

def read_envelope():
    if sys.stdin.isatty():
        return {}
    text = sys.stdin.read().strip()
    if not text:
        return {}
    try:
        data = json.loads(text)
    except json.JSONDecodeError as err:
        raise BadInput("stdin is not JSON", witness=str(err))
    if not isinstance(data, dict):
        raise BadInput("envelope must be a JSON object")
    return data


def need_fan(env):
    if "fan" not in env:
        raise BadInput("no fan in the input envelope")
    return fan_from_json(env["fan"])


def need_partition(env, fan):
    if "partition" not in env:
        raise BadInput("no partition in the input envelope")
    return partlib.partition_from_json(fan, env["partition"])


def need_poset(env, fan):
    if "poset" not in env:
        raise BadInput("no poset in the input envelope")
    return posetlib.poset_from_json(fan, env["poset"])


def need_arrangement(env):
    if "arrangement" not in env:
        raise BadInput("no arrangement in the input envelope")
    return arrlib.arrangement_from_json(env["arrangement"])


def need_presentation(env):
    if "presentation" not in env:
        raise BadInput("no presentation in the input envelope")
    return grplib.presentation_from_json(env["presentation"])


def parse_cone(text):
    text = text.strip()
    if text.startswith("s"):
        return (int(text[1:]) - 1,)
    if text in ("0", "[]"):
        return ()
    if text.startswith("[") and text.endswith("]"):
        inner = text[1:-1].strip()
        if not inner:
            return ()
        return tuple(sorted(int(t) for t in inner.split(",")))
    raise BadInput("cannot parse cone selector", witness=text)


def parse_seeds(text):
    pairs = []
    depth = 0
    token = ""
    chunks = []
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        if ch == "," and depth == 0:
            chunks.append(token)
            token = ""
        else:
            token += ch
    if token:
        chunks.append(token)
    for chunk in chunks:
        if "~" not in chunk:
            raise BadInput("seed must look like a~b", witness=chunk)
        a, b = chunk.split("~", 1)
        pairs.append((parse_cone(a), parse_cone(b)))
    return pairs


def resolve_base(env, fan, selector):
    if selector == "positive":
        arr = need_arrangement(env)
        arrfan = arrlib.arrangement_fan(arr, with_signs=True)
        target = (1,) * len(arr.normals)
        for c in arrfan.fan.max_cones:
            if arrfan.sign_of(c) == target:
                return c
        raise BadInput("no all-positive chamber")
    return fan.check_cone(parse_cone(selector))


# ---------------------------------------------------------------------------
# handlers

def cmd_examples(args):
    obj = catalog.EXAMPLES[args.name]()
    if args.name == "brauer3":
        return {"arrangement": obj.to_json()}
    return {"fan": obj.to_json()}


def cmd_fan_validate(args):
    env = read_envelope()
    fan = need_fan(env)
    report = validate_fan(fan)
    out = report.to_json()
    out["max_cones"] = len(fan.max_cones)
    return out


def cmd_fan_complete(args):
    env = read_envelope()
    return {"complete": is_finite_complete(need_fan(env))}


def cmd_fan_from_arrangement(args):
    env = read_envelope()
    arr = need_arrangement(env)
    env["fan"] = arrlib.arrangement_fan(arr).to_json()
    return env


def cmd_partition_potentials(args):
    env = read_envelope()
    fan = need_fan(env)
    env["partition"] = partlib.potential_identifications(fan).partition.to_json()
    return env


def cmd_partition_check(args):
    env = read_envelope()
    fan = need_fan(env)
    ok, witness = partlib.is_admissible(fan, need_partition(env, fan))
    return {"admissible": ok,
            "witness": None if witness is None else [list(c) for c in witness]}


def cmd_partition_closure(args):
    env = read_envelope()
    fan = need_fan(env)
    env["partition"] = partlib.admissible_closure(
        fan, parse_seeds(args.seed)).to_json()
    return env


def _other_partition(path, fan):
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if "partition" in data:
        data = data["partition"]
    return partlib.partition_from_json(fan, data)


def cmd_partition_meet(args):
    env = read_envelope()
    fan = need_fan(env)
    result = partlib.meet(need_partition(env, fan), _other_partition(args.other, fan))
    env["partition"] = result.to_json()
    return env


def cmd_partition_join(args):
    env = read_envelope()
    fan = need_fan(env)
    result = partlib.join(need_partition(env, fan), _other_partition(args.other, fan))
    env["partition"] = result.to_json()
    return env


def cmd_partition_enumerate(args):
    env = read_envelope()
    fan = need_fan(env)
    parts = partlib.enumerate_admissible(fan, limit=args.limit)
    return {"count": len(parts), "partitions": [p.to_json() for p in parts]}


def _category(env):
    fan = need_fan(env)
    partition = need_partition(env, fan)
    return fan, partition, catlib.build_category(fan, partition)


def cmd_category_build(args):
    env = read_envelope()
    _, _, category = _category(env)
    env["category"] = category.to_json()
    return env


def cmd_category_cubical(args):
    env = read_envelope()
    _, _, category = _category(env)
    return catlib.check_cubical(category).to_json()


def cmd_category_last_factors(args):
    env = read_envelope()
    _, _, category = _category(env)
    ok, witness = catlib.check_last_factor_compatibility(category)
    return {"compatible": ok, "witness": None if witness is None else list(witness)}


def cmd_category_export(args):
    env = read_envelope()
    _, _, category = _category(env)
    if args.format == "dot":
        return catlib.export_category_dot(category)
    return category.to_json()


def cmd_poset_functional(args):
    env = read_envelope()
    fan = need_fan(env)
    b = tuple(int(t) for t in args.b.split(","))
    env["poset"] = posetlib.poset_from_linear_functional(fan, b).to_json()
    return env


def cmd_poset_bisector(args):
    env = read_envelope()
    fan = need_fan(env)
    base = fan.check_cone(parse_cone(args.base))
    env["poset"] = posetlib.rank2_bisector_poset(fan, base).to_json()
    return env


def cmd_poset_regions(args):
    env = read_envelope()
    arr = need_arrangement(env)
    arrfan = arrlib.arrangement_fan(arr, with_signs=True)
    env["fan"] = arrfan.fan.to_json()
    base = resolve_base(env, arrfan.fan, args.base)
    env["poset"] = arrlib.poset_of_regions(arrfan, base).to_json()
    return env


def cmd_poset_check(args):
    env = read_envelope()
    fan = need_fan(env)
    return posetlib.check_weak_fan_poset(fan, need_poset(env, fan)).to_json()


def cmd_poset_nondegenerate(args):
    env = read_envelope()
    fan = need_fan(env)
    ok, witness = posetlib.check_nondegenerate(
        fan, need_partition(env, fan), need_poset(env, fan))
    return {"nondegenerate": ok, "witness": witness}


def cmd_group_picture(args):
    env = read_envelope()
    fan = need_fan(env)
    pres = grplib.picture_group(fan, need_partition(env, fan),
                                need_poset(env, fan), mode=args.mode)
    return _presentation_output(env, pres, args.format)


def cmd_group_alt(args):
    env = read_envelope()
    fan = need_fan(env)
    pres = grplib.alt_presentation(fan, need_partition(env, fan),
                                   need_poset(env, fan))
    return _presentation_output(env, pres, args.format)


def _presentation_output(env, pres, fmt):
    if fmt == "text":
        return pres.to_text() + "\n"
    if fmt == "gap":
        return pres.to_gap()
    env["presentation"] = pres.to_json()
    return env


def cmd_group_psi(args):
    env = read_envelope()
    fan = need_fan(env)
    partition = need_partition(env, fan)
    poset = need_poset(env, fan)
    category = catlib.build_category(fan, partition)
    morphism = category.morphism_of_pair(parse_cone(args.source),
                                         parse_cone(args.target))
    word = grplib.psi(fan, partition, poset, morphism)
    return {"word": grplib.render_word(word)}


def cmd_group_quotient(args):
    env = read_envelope()
    fan = need_fan(env)
    fine = need_partition(env, fan)
    coarse = _other_partition(args.coarse, fan)
    pres = grplib.quotient_presentation(need_presentation(env), fan, fine, coarse)
    env["presentation"] = pres.to_json()
    return env


def cmd_group_abelianize(args):
    env = read_envelope()
    free_rank, torsion = grplib.abelianization(need_presentation(env))
    return {"free_rank": free_rank, "torsion": list(torsion)}


def cmd_group_certify_rank2(args):
    env = read_envelope()
    fan = need_fan(env)
    partition = need_partition(env, fan)
    category = catlib.build_category(fan, partition)
    poset = need_poset(env, fan) if "poset" in env else \
        posetlib.rank2_bisector_poset(fan, fan.max_cones[0])
    ok, witness = grplib.rank2_faithfulness_certificate(category, poset)
    return {"faithful": ok, "witness": witness}


def cmd_group_certify_brauer(args):
    env = read_envelope()
    arr = need_arrangement(env)
    arrfan = arrlib.arrangement_fan(arr, with_signs=True)
    fan = arrfan.fan
    env["fan"] = fan.to_json()
    partition = need_partition(env, fan) if "partition" in env \
        else arrlib.flat_partition(arr, fan)
    base = resolve_base(env, fan, "positive")
    poset = arrlib.poset_of_regions(arrfan, base)
    flat = arrlib.flat_partition(arr, fan)
    flat_pres = grplib.picture_group(fan, flat, poset, mode="codim2")
    wa_ok = arrlib.wa_certify(arr, flat_pres)
    category = catlib.build_category(fan, partition)
    hom_ok, witness = grplib.hom_distinctness_certificate(category, poset, wa_ok)
    return {"wall_algebra": wa_ok, "hom_distinctness": hom_ok,
            "faithful": wa_ok and hom_ok, "witness": witness}


def cmd_cw_build(args):
    env = read_envelope()
    fan = need_fan(env)
    complex_ = cwlib.build_cw(fan, need_partition(env, fan))
    env["cw"] = complex_.to_json()
    return env


def _rebuild_cw(env):
    fan = need_fan(env)
    return cwlib.build_cw(fan, need_partition(env, fan))


def cmd_cw_euler(args):
    env = read_envelope()
    return cwlib.euler_characteristic(_rebuild_cw(env))


def cmd_cw_pi1(args):
    env = read_envelope()
    pres = cwlib.pi1_presentation(_rebuild_cw(env))
    return pres.to_json()


def cmd_cw_compare(args):
    env = read_envelope()
    return cwlib.compare_pi1_picture(_rebuild_cw(env), need_presentation(env))


def cmd_arr_flats(args):
    env = read_envelope()
    arr = need_arrangement(env)
    return {"flats": [f.to_json() for f in arrlib.flats(arr)]}


def _arr_with_base(env, selector):
    arr = need_arrangement(env)
    arrfan = arrlib.arrangement_fan(arr, with_signs=True)
    env["fan"] = arrfan.fan.to_json()
    base = resolve_base(env, arrfan.fan, selector)
    return arr, arrfan, base


def cmd_arr_shards(args):
    env = read_envelope()
    arr, arrfan, base = _arr_with_base(env, args.base)
    shard_list = arrlib.shards(arr, arrfan, base)
    return {"count": len(shard_list),
            "shards": [s.to_json() for s in shard_list]}


def cmd_arr_shard_partition(args):
    env = read_envelope()
    arr, arrfan, base = _arr_with_base(env, args.base)
    env["partition"] = arrlib.shard_partition(arr, arrfan, base).to_json()
    return env


def cmd_arr_flat_partition(args):
    env = read_envelope()
    arr = need_arrangement(env)
    fan = arrlib.arrangement_fan(arr)
    env["fan"] = fan.to_json()
    env["partition"] = arrlib.flat_partition(arr, fan).to_json()
    return env


def cmd_arr_wall_algebra(args):
    env = read_envelope()
    arr = need_arrangement(env)
    algebra = arrlib.WallAlgebra(arr)
    table = {}
    for a in algebra.basis:
        for b in algebra.basis:
            table["%s * %s" % (_wa_name(a), _wa_name(b))] = \
                _wa_name(algebra.basis_mul(a, b))
    return {"basis": [_wa_name(b) for b in algebra.basis], "table": table}


def _wa_name(key):
    if key == arrlib.ZERO_SYMBOL:
        return "0"
    return "(%s)" % ",".join(str(x) for x in key)


def cmd_render(args):
    env = read_envelope()
    if "fan" in env:
        fan = need_fan(env)
        if fan.dim == 2:
            return render.fan_svg(fan)
    arr = need_arrangement(env)
    projection = tuple(int(t) for t in args.projection.split(","))
    return render.arrangement_svg(arr, projection_point=projection)


if __name__ == "__main__":
    sys.exit(main())

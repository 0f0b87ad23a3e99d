"""Builds stub-blur.onnx, the tiny synthetic depth model used by the tests.

Graph (opset 13, fixed 1x3x256x256 input):
    gray = ReduceMean(image, axes=[1], keepdims=1)
    inv  = Sub(1.0, gray)
    blur = AveragePool(inv, 63x63, stride 1, pads 31)   # count_include_pad=0
    out  = Squeeze(blur, axes=[1])                      # -> 1x256x256

A wide box blur of inverted luminance responds more strongly inside wide
(near) objects than thin (far) ones, so the output behaves like a crude
relative-size-driven disparity map. Hand-encoded protobuf: the build
environment has no onnx package, and the graph is small enough to spell
out. Run `python3 make_stub_onnx.py` to regenerate.
"""

import struct
from pathlib import Path


def varint(n: int) -> bytes:
    out = b""
    while True:
        b = n & 0x7F
        n >>= 7
        if n:
            out += bytes([b | 0x80])
        else:
            return out + bytes([b])


def field_varint(num: int, value: int) -> bytes:
    return varint(num << 3 | 0) + varint(value)


def field_bytes(num: int, payload: bytes) -> bytes:
    return varint(num << 3 | 2) + varint(len(payload)) + payload


def field_str(num: int, s: str) -> bytes:
    return field_bytes(num, s.encode())


def attr_ints(name: str, values: list[int]) -> bytes:
    body = field_str(1, name) + field_varint(20, 7)  # type = INTS
    for v in values:
        body += field_varint(8, v)
    return body


def attr_int(name: str, value: int) -> bytes:
    return field_str(1, name) + field_varint(20, 2) + field_varint(3, value)


def node(op: str, inputs: list[str], outputs: list[str], attrs: list[bytes] = ()) -> bytes:
    body = b"".join(field_str(1, i) for i in inputs)
    body += b"".join(field_str(2, o) for o in outputs)
    body += field_str(4, op)
    body += b"".join(field_bytes(5, a) for a in attrs)
    return body


def tensor_value_info(name: str, dims: list[int]) -> bytes:
    shape = b"".join(field_bytes(1, field_varint(1, d)) for d in dims)
    tensor_type = field_varint(1, 1) + field_bytes(2, shape)  # elem_type FLOAT
    return field_str(1, name) + field_bytes(2, field_bytes(1, tensor_type))


def initializer(name: str, dims: list[int], data_type: int, raw: bytes) -> bytes:
    body = b"".join(field_varint(1, d) for d in dims)
    body += field_varint(2, data_type)
    body += field_str(8, name)
    body += field_bytes(9, raw)
    return body


nodes = [
    node("ReduceMean", ["image"], ["gray"], [attr_ints("axes", [1]), attr_int("keepdims", 1)]),
    node("Sub", ["one", "gray"], ["inv"]),
    node(
        "AveragePool",
        ["inv"],
        ["blur"],
        [
            attr_ints("kernel_shape", [63, 63]),
            attr_ints("strides", [1, 1]),
            attr_ints("pads", [31, 31, 31, 31]),
            attr_int("count_include_pad", 0),
        ],
    ),
    node("Squeeze", ["blur", "squeeze_axes"], ["disparity"]),
]

graph = b"".join(field_bytes(1, n) for n in nodes)
graph += field_str(2, "stub_blur")
graph += field_bytes(5, initializer("one", [], 1, struct.pack("<f", 1.0)))
graph += field_bytes(5, initializer("squeeze_axes", [1], 7, struct.pack("<q", 1)))
graph += field_bytes(11, tensor_value_info("image", [1, 3, 256, 256]))
graph += field_bytes(12, tensor_value_info("disparity", [1, 256, 256]))

model = field_varint(1, 7)  # ir_version
model += field_str(2, "sizecue-adapter-tests")
model += field_bytes(7, graph)
model += field_bytes(8, field_str(1, "") + field_varint(2, 13))  # opset 13

out = Path(__file__).parent / "stub-blur.onnx"
out.write_bytes(model)
print(f"wrote {out} ({len(model)} bytes)")

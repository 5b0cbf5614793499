import pydantic


def _parse_args(*args) -> dict:
    if len(args) == 1 and isinstance(args[0], str):
        args = tuple(args[0].replace("S", "").split(","))
    elif len(args) == 1 and isinstance(args[0], (tuple, list)):
        args = tuple(args[0])
    if len(args) == 2:
        try:
            a, b = (int(value) for value in args)
        except ValueError as error:
            raise ValueError(f"Invalid double star {args!r}") from error
        return {"a": a, "b": b}
    raise ValueError("Invalid number of arguments for DoubleStar")


class DoubleStar(pydantic.BaseModel):
    """The double star S_{a,b}: a star with a leaves and a star with b leaves whose centers are joined

    The star degrees are stored sorted, so S_{3,1} and S_{1,3} are the same pattern.

    Examples:
    >>> DoubleStar(a=1, b=3)
    DoubleStar(a=1, b=3)
    >>> DoubleStar(3, 1)
    DoubleStar(a=1, b=3)
    >>> DoubleStar((2, 2)) == DoubleStar("2,2")
    True
    """

    model_config = pydantic.ConfigDict(frozen=True)

    a: int = pydantic.Field(ge=1)
    b: int = pydantic.Field(ge=1)

    def __init__(self, *args, **kwargs):
        if args:
            super().__init__(**_parse_args(*args))
        else:
            super().__init__(**kwargs)

    @pydantic.model_validator(mode="after")
    def _sort_degrees(self) -> "DoubleStar":
        if self.a > self.b:
            a, b = self.b, self.a
            # frozen model
            object.__setattr__(self, "a", a)
            object.__setattr__(self, "b", b)
        return self

    @property
    def is_symmetric(self) -> bool:
        return self.a == self.b

    @property
    def order(self) -> int:
        """Number of vertices of the pattern

        Examples:
        >>> DoubleStar(1, 3).order
        6
        """
        return self.a + self.b + 2

    def to_tuple(self) -> tuple[int, int]:
        return self.a, self.b

    def __str__(self):
        return f"S{self.a},{self.b}"

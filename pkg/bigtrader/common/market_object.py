from bigtrader.common.enums import ObjectType
from typing_extensions import Self


class MarketObject:
    """
    `MarketObject Class Notes:`

        This class is widely used throughout the project to represent the different values the backtester passes
        around. If a new class is created and needs to be written to the JSON results, make sure it inherits from
        MarketObject and extends to_json and from_json.
    """
    def __init__(self, **kwargs):
        self.object_type = ObjectType.NONE

    def to_json(self) -> dict:
        # It is recommended call this using super() in child implementations
        data = dict()

        data['object_type'] = self.object_type.value

        return data

    def from_json(self, data: dict) -> Self:
        # It is recommended call this using super() in child implementations
        self.object_type = ObjectType(data['object_type'])
        return self

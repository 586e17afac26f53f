import enum
import json


class NetlistEncoder(json.JSONEncoder):
    """JSON encoder that writes enum members as their values"""
    def default(self, obj):
        if isinstance(obj, enum.Enum):
            return obj.value
        return super().default(obj)

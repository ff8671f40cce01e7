import json
from typing import Optional

from burnside_etale.utils.check_type import validate_value_type
from burnside_etale.utils.nice_list import nicely_join

from .exceptions import TomFormatError
from .tom_document import TomDocument

KEYS = ('name', 'order', 'marks', 'class_orders')
REQUIRED_KEYS = ('order', 'marks')


def read_json_tom(text: str) -> TomDocument:
    """
    Parse and validate a table of marks document:
        {"name": "C6", "order": 6, "marks": [[6],[3,3],[2,0,2],[1,1,1,1]], "class_orders": [1,2,3,6]}
    `name` and `class_orders` are optional; `order` must equal the first mark.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TomFormatError(f'not valid json: {e.msg}', position=e.pos)
    validate_value_type(data, dict, 'at the top level')
    unknown = [key for key in data if key not in KEYS]
    if unknown:
        raise TomFormatError(f'unknown keys {nicely_join(unknown)}; '
                             f'expected some of {nicely_join(KEYS, last_separator=" or ")}')
    missing = [key for key in REQUIRED_KEYS if key not in data]
    if missing:
        raise TomFormatError(f'missing keys {nicely_join(missing)}')
    validate_value_type(data.get('name'), Optional[str], '`name`')
    validate_value_type(data['order'], int, '`order`')
    validate_value_type(data['marks'], list[list[int]], '`marks`')
    validate_value_type(data.get('class_orders'), Optional[list[int]], '`class_orders`')
    marks = data['marks']
    if not marks or not marks[0]:
        raise TomFormatError('`marks` must start with the row [order]')
    if data['order'] != marks[0][0]:
        raise TomFormatError(f'`order` is {data["order"]} but the first mark is {marks[0][0]}')
    doc = TomDocument(marks=marks, name=data.get('name'), class_orders=data.get('class_orders'))
    doc.to_table_of_marks()
    return doc


def write_json_tom(doc: TomDocument) -> str:
    """
    The canonical json text of a document; read_json_tom reads it back to an equal document.
    """
    data = {}
    if doc.name is not None:
        data['name'] = doc.name
    data['order'] = doc.marks[0][0]
    data['marks'] = [list(row) for row in doc.marks]
    if doc.class_orders is not None:
        data['class_orders'] = list(doc.class_orders)
    return json.dumps(data, separators=(',', ':')) + '\n'

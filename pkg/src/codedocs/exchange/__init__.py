from codedocs.exchange.xml_exchange import XmlModelDocument, parse_model, read_model, serialize_model, write_model
